#pragma once

#include "lps/contact/structure.hpp"
#include "lps/geometry/check.hpp"
#include "lps/geometry/tensor.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lps::hyp {

using geo::Chart;
using geo::CheckConfig;
using geo::CheckEntry;
using geo::Connection;
using geo::Expr;
using geo::Matrix;
using geo::MetricField;
using geo::StructureReport;
using geo::TensorField;

/// Ambient vector components expressed in the parameters.
using AlongField = std::vector<Expr>;

class HypersurfaceError : public geo::GeometryError {
 public:
  using geo::GeometryError::GeometryError;
};

/// A precondition of an operation does not hold (for example xi is not tangent).
class PreconditionError : public HypersurfaceError {
 public:
  using HypersurfaceError::HypersurfaceError;
};

/// Map from an (n-1)-dimensional parameter chart into an n-dimensional
/// ambient chart. Ambient quantities are pulled back by substituting the map.
class Immersion {
 public:
  Immersion(Chart params, Chart ambient, std::vector<Expr> map);

  const Chart& params() const noexcept { return params_; }
  const Chart& ambient() const noexcept { return ambient_; }
  const std::vector<Expr>& map() const noexcept { return map_; }

  Expr pull(const Expr& ambient_expr) const;
  AlongField pull(const TensorField& ambient_vector) const;
  /// Ambient (1,1) or (0,2) components as a matrix in the parameters.
  Matrix pull_matrix(const TensorField& ambient_tensor) const;

 private:
  Chart params_;
  Chart ambient_;
  std::vector<Expr> map_;
  std::vector<std::pair<std::string, Expr>> bindings_;
};

/// u_a = i_*(d/d param_a). Throws HypersurfaceError if the Jacobian loses rank
/// at a sample point.
std::vector<AlongField> tangent_frame(const Immersion& i, const CheckConfig& cfg = {});

/// n x (n-1) matrix whose columns are the frame fields, optionally followed by T.
Matrix frame_matrix(std::span<const AlongField> frame, const AlongField* transversal = nullptr);

/// Columns of rhs expressed in the square basis formed by the columns of
/// `basis`. Throws HypersurfaceError if the basis is singular at a sample point.
Matrix decompose_in_basis(const Chart& params, const Matrix& basis, const Matrix& rhs,
                          const CheckConfig& cfg, std::string_view what);

enum class TransversalKind { Characteristic, MetricNormal, UserField };

std::string_view transversal_name(TransversalKind k);

struct TransversalChoice {
  TransversalKind kind = TransversalKind::Characteristic;
  std::optional<TensorField> field;  // ambient vector field for UserField

  static TransversalChoice characteristic() { return {}; }
  static TransversalChoice metric_normal() { return {TransversalKind::MetricNormal, std::nullopt}; }
  static TransversalChoice user(TensorField f) { return {TransversalKind::UserField, std::move(f)}; }
};

/// N with g(N, u_a) = 0, from cofactors of the covectors g u_a. Scaled so
/// that the last component that is nonzero at every sample point equals 1.
/// Throws HypersurfaceError if N is tangent (degenerate induced metric).
AlongField metric_normal(const Immersion& i, const MetricField& g, const CheckConfig& cfg = {});

AlongField resolve_transversal(const Immersion& i, const contact::AcStructure& s,
                               const TransversalChoice& choice, const MetricField* g,
                               const CheckConfig& cfg = {});

/// Induced metric g(u_a, u_b) on the parameter chart.
TensorField induced_metric(const Immersion& i, const MetricField& g, const CheckConfig& cfg = {});

enum class XiPosition { Tangent, Transversal, Mixed };

std::string_view xi_position_name(XiPosition p);

struct XiPositionResult {
  XiPosition position = XiPosition::Mixed;
  int tangent_points = 0;
  int transversal_points = 0;
  std::vector<std::string> witnesses;  // points that disagree with the majority
};

XiPositionResult xi_position(const Immersion& i, const TensorField& xi, const CheckConfig& cfg = {});

}  // namespace lps::hyp
