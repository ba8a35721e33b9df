#include "lps/geometry/connection.hpp"

namespace lps::geo {

Connection::Connection(Chart chart, std::vector<Expr> coefficients, bool torsion_free)
    : chart_(std::move(chart)), coefficients_(std::move(coefficients)), torsion_free_(torsion_free) {
  const std::size_t n = chart_.dim();
  if (coefficients_.size() != n * n * n) {
    throw DimensionError("connection needs " + std::to_string(n * n * n) + " coefficients, got " +
                         std::to_string(coefficients_.size()));
  }
  for (auto& c : coefficients_) c = sym::simplify(c);
  if (!torsion_free_) return;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(gamma(k, i, j) - gamma(k, j, i)).is_zero()) {
          throw GeometryError("connection flagged torsion-free is not symmetric in its lower indices");
        }
      }
    }
  }
}

Connection Connection::zero(const Chart& chart) {
  const std::size_t n = chart.dim();
  return Connection(chart, std::vector<Expr>(n * n * n), true);
}

}  // namespace lps::geo
