#pragma once

#include "lps/symexpr/expr.hpp"
#include "lps/symexpr/sample.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace lps::sym {

inline void PrintTo(const Expr& e, std::ostream* os) { *os << e.str(); }

}  // namespace lps::sym

namespace lps::testing {

/// Parsed and simplified.
inline sym::Expr canon(std::string_view text) { return sym::simplify(sym::parse_expr(text)); }


// Seeded random expressions that stay finite on (-1, 1)^n: every function
// argument is either unrestricted (exp, sin, cos, arctan) or shifted into its
// domain (log and sqrt of 2 + u^2).
class ExprGen {
 public:
  ExprGen(std::uint64_t seed, std::vector<std::string> vars) : rng_(seed), vars_(std::move(vars)) {}

  sym::Expr leaf() {
    if (coin(0.6)) return sym::Expr::symbol(vars_[pick(vars_.size())]);
    return sym::Expr(static_cast<int>(pick(7)) - 3);
  }

  sym::Expr operator()(int depth) {
    if (depth <= 0 || coin(0.2)) return leaf();
    const sym::Expr a = (*this)(depth - 1);
    switch (pick(8)) {
      case 0: return sym::Expr::raw_sum({a, (*this)(depth - 1)});
      case 1: return sym::Expr::raw_product({a, (*this)(depth - 1)});
      case 2: return sym::Expr::raw_power(a, static_cast<long>(pick(3)) + 2);
      case 3: return sym::Expr::raw_function(sym::Func::Exp, a);
      case 4: return sym::Expr::raw_function(coin(0.5) ? sym::Func::Sin : sym::Func::Cos, a);
      case 5: return sym::Expr::raw_function(sym::Func::Arctan, a);
      case 6: {
        const sym::Expr shifted = sym::Expr::raw_sum({sym::Expr(2), sym::Expr::raw_power(a, 2)});
        return sym::Expr::raw_function(coin(0.5) ? sym::Func::Log : sym::Func::Sqrt, shifted);
      }
      default:
        return sym::Expr::raw_quotient(a, sym::Expr::raw_sum({sym::Expr(3), sym::Expr::raw_power((*this)(depth - 1), 2)}));
    }
  }

  /// Polynomial of total degree <= 2 with small integer coefficients.
  sym::Expr polynomial() {
    std::vector<sym::Expr> terms{sym::Expr(coef())};
    for (const auto& v : vars_) {
      terms.push_back(coef() * sym::Expr::symbol(v));
      if (coin(0.3)) terms.push_back(coef() * sym::pow(sym::Expr::symbol(v), 2));
    }
    if (vars_.size() > 1 && coin(0.3)) terms.push_back(coef() * sym::Expr::symbol(vars_[0]) * sym::Expr::symbol(vars_[1]));
    return sym::sum(terms);
  }

  int coef() { return static_cast<int>(pick(5)) - 2; }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
};

inline sym::SamplePoint point(const std::vector<std::string>& coords, const std::vector<double>& values) {
  sym::SamplePoint p;
  for (std::size_t k = 0; k < values.size(); ++k) p.set(coords[k], values[k]);
  return p;
}

inline double close_rel(double a, double b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

}  // namespace lps::testing
