#include "lps/symexpr/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lps::sym {

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

bool exprs_equivalent(const Expr& a, const Expr& b, const DomainBox& dom, int n_points, double tol,
                      std::uint64_t seed) {
  if (n_points < 1) throw std::invalid_argument("n_points must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");

  const Expr sa = simplify(a);
  const Expr sb = simplify(b);
  if ((sa - sb).is_zero()) return true;

  std::set<std::string> names = sa.symbols();
  for (const auto& s : sb.symbols()) names.insert(s);
  const std::vector<std::string> coords(names.begin(), names.end());

  Sampler sampler(seed);
  const std::vector<Expr> both{sa, sb};
  for (const auto& p : sampler.draw_valid(dom, coords, both, n_points)) {
    if (relative_residual(eval(sa, p), eval(sb, p)) > tol) return false;
  }
  return true;
}

}  // namespace lps::sym
