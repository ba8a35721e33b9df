#pragma once

#include "lps/geometry/check.hpp"
#include "lps/geometry/tensor.hpp"

#include <Eigen/Core>

namespace lps::geo {

enum class Signature { Riemannian, Lorentzian, Other };

std::string_view signature_name(Signature s);

/// Symmetric nondegenerate (0,2) field with its symbolic inverse.
class MetricField {
 public:
  /// Throws GeometryError if g is not symmetric, SingularError if det g
  /// vanishes at a sample point.
  explicit MetricField(TensorField g, const CheckConfig& cfg = {});

  const TensorField& tensor() const noexcept { return g_; }
  const Chart& chart() const noexcept { return g_.chart(); }
  const Expr& at(std::size_t i, std::size_t j) const { return g_.at(i, j); }
  /// g^ij.
  const Expr& inverse(std::size_t i, std::size_t j) const { return inverse_.at(i).at(j); }
  /// Classified from the eigenvalues at the centre of the chart's box.
  Signature signature() const noexcept { return signature_; }

 private:
  TensorField g_;
  Matrix inverse_;
  Signature signature_;
};

Signature classify_signature(const Eigen::MatrixXd& symmetric, double tol);

}  // namespace lps::geo
