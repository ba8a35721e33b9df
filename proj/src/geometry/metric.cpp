#include "lps/geometry/metric.hpp"

#include "lps/geometry/linalg.hpp"

#include <cmath>

namespace lps::geo {

std::string_view signature_name(Signature s) {
  switch (s) {
    case Signature::Riemannian: return "riemannian";
    case Signature::Lorentzian: return "lorentzian";
    case Signature::Other: return "other";
  }
  return "other";
}

Signature classify_signature(const Eigen::MatrixXd& symmetric, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int negative = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tol * scale) return Signature::Other;
    if (ev(i) < 0) ++negative;
  }
  if (negative == 0) return Signature::Riemannian;
  if (negative == 1) return Signature::Lorentzian;
  return Signature::Other;
}

MetricField::MetricField(TensorField g, const CheckConfig& cfg) : g_(std::move(g)) {
  require_signature(g_, 0, 2, "MetricField");
  const std::size_t n = g_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(g_.at(i, j) - g_.at(j, i)).is_zero()) {
        throw GeometryError("metric is not symmetric at (" + g_.chart().coords()[i] + "," +
                            g_.chart().coords()[j] + ")");
      }
    }
  }
  const auto probes = sample_points(g_.chart(), cfg, g_.components());
  for (const auto& p : probes) {
    const Eigen::MatrixXd m = evaluate(g_.matrix(), p);
    if (matrix_rank(m, cfg.tol) < static_cast<int>(n)) {
      throw SingularError("metric is degenerate at " + p.str());
    }
  }
  inverse_ = solve(g_.matrix(), identity_matrix(n), probes);

  sym::SamplePoint centre;
  for (const auto& c : g_.chart().coords()) {
    const auto iv = g_.chart().domain().interval(c);
    centre.set(c, 0.5 * (iv.lo + iv.hi));
  }
  try {
    signature_ = classify_signature(evaluate(g_.matrix(), centre), cfg.tol);
  } catch (const sym::EvalError&) {
    signature_ = classify_signature(evaluate(g_.matrix(), probes.front()), cfg.tol);
  }
}

}  // namespace lps::geo
