#pragma once

#include "lps/geometry/chart.hpp"

#include <vector>

namespace lps::geo {

/// Affine connection with nabla_{d_i} d_j = Gamma^k_ij d_k, stored at
/// k*n*n + i*n + j.
class Connection {
 public:
  /// With torsion_free set, throws GeometryError unless Gamma^k_ij = Gamma^k_ji
  /// after simplification.
  Connection(Chart chart, std::vector<Expr> coefficients, bool torsion_free);

  static Connection zero(const Chart& chart);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  const Expr& gamma(std::size_t k, std::size_t i, std::size_t j) const {
    return coefficients_[(k * dim() + i) * dim() + j];
  }
  const std::vector<Expr>& coefficients() const noexcept { return coefficients_; }
  bool torsion_free() const noexcept { return torsion_free_; }

 private:
  Chart chart_;
  std::vector<Expr> coefficients_;
  bool torsion_free_;
};

}  // namespace lps::geo
