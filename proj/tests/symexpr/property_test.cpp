#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using lps::sym::Expr;
using lps::testing::ExprGen;

constexpr int kCases = 200;

std::optional<double> try_eval(const Expr& e, const lps::sym::SamplePoint& p) {
  try {
    const double v = lps::sym::eval(e, p);
    if (std::isfinite(v)) return v;
  } catch (const lps::sym::EvalError&) {
  }
  return std::nullopt;
}

TEST(SymexprProperty, SimplifyIsIdempotent) {
  ExprGen gen(101, {"x", "y"});
  for (int k = 0; k < kCases; ++k) {
    const Expr s = lps::sym::simplify(gen(4));
    EXPECT_TRUE(s.canonical());
    EXPECT_EQ(lps::sym::simplify(s), s) << s.str();
  }
}

TEST(SymexprProperty, SimplifyPreservesValue) {
  ExprGen gen(102, {"x", "y"});
  lps::sym::Sampler sampler(5);
  const std::vector<std::string> coords{"x", "y"};
  for (int k = 0; k < kCases; ++k) {
    const Expr raw = gen(4);
    const Expr s = lps::sym::simplify(raw);
    const auto p = sampler.draw({}, coords);
    const auto a = try_eval(raw, p);
    const auto b = try_eval(s, p);
    if (!a || !b) continue;
    EXPECT_LE(lps::sym::relative_residual(*a, *b), 1e-9) << raw.str() << " vs " << s.str() << " at " << p.str();
  }
}

TEST(SymexprProperty, PrintParseRoundTrip) {
  ExprGen gen(103, {"x", "y", "z"});
  for (int k = 0; k < kCases; ++k) {
    const Expr s = lps::sym::simplify(gen(4));
    EXPECT_EQ(lps::testing::canon(s.str()), s) << s.str();
  }
}

TEST(SymexprProperty, DerivativeMatchesFiniteDifference) {
  ExprGen gen(104, {"x", "y"});
  lps::sym::Sampler sampler(6);
  const std::vector<std::string> coords{"x", "y"};
  int checked = 0;
  for (int k = 0; k < kCases; ++k) {
    const Expr f = gen(4);
    for (const char* var : {"x", "y"}) {
      const Expr df = lps::sym::diff(f, var);
      auto p = sampler.draw(lps::sym::DomainBox({{"x", {-0.8, 0.8}}, {"y", {-0.8, 0.8}}}), coords);
      const double h = 1e-5;
      const double at = p.at(var);
      auto plus = p, minus = p;
      plus.set(var, at + h);
      minus.set(var, at - h);
      const auto fp = try_eval(f, plus), fm = try_eval(f, minus), d = try_eval(df, p);
      if (!fp || !fm || !d) continue;
      const double fd = (*fp - *fm) / (2 * h);
      const double scale = 1.0 + std::abs(*fp) + std::abs(*fm);
      EXPECT_LE(std::abs(fd - *d) / (scale + std::abs(*d)), 1e-6) << "d/d" << var << " " << f.str() << " at " << p.str();
      ++checked;
    }
  }
  EXPECT_GT(checked, kCases);
}

TEST(SymexprProperty, DerivativeIsADerivation) {
  ExprGen gen(105, {"x", "y"});
  lps::sym::Sampler sampler(7);
  const std::vector<std::string> coords{"x", "y"};
  for (int k = 0; k < kCases; ++k) {
    const Expr f = gen(3), g = gen(3);
    const Expr lhs = lps::sym::diff(f * g, "x");
    const Expr rhs = lps::sym::diff(f, "x") * g + f * lps::sym::diff(g, "x");
    const Expr sum_lhs = lps::sym::diff(f + g, "y");
    const Expr sum_rhs = lps::sym::diff(f, "y") + lps::sym::diff(g, "y");
    EXPECT_TRUE((sum_lhs - sum_rhs).is_zero()) << f.str() << ", " << g.str();
    const auto p = sampler.draw({}, coords);
    const auto a = try_eval(lhs, p), b = try_eval(rhs, p);
    if (!a || !b) continue;
    EXPECT_LE(lps::sym::relative_residual(*a, *b), 1e-9) << f.str() << ", " << g.str();
  }
}

TEST(SymexprProperty, MixedPartialsCommute) {
  ExprGen gen(106, {"x", "y"});
  for (int k = 0; k < kCases; ++k) {
    const Expr f = gen(3);
    const Expr xy = lps::sym::diff(lps::sym::diff(f, "x"), "y");
    const Expr yx = lps::sym::diff(lps::sym::diff(f, "y"), "x");
    EXPECT_TRUE(lps::sym::exprs_equivalent(xy, yx, {}, 10)) << f.str();
  }
}

}  // namespace
