#pragma once

#include "lps/symexpr/expr.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lps::sym {

/// Assignment coordinate name -> value.
class SamplePoint {
 public:
  SamplePoint() = default;
  explicit SamplePoint(std::map<std::string, double> values) : values_(std::move(values)) {}

  void set(const std::string& name, double value) { values_[name] = value; }
  /// Throws MissingSymbolError when the coordinate is not assigned.
  double at(const std::string& name) const;
  bool contains(const std::string& name) const { return values_.count(name) != 0; }
  const std::map<std::string, double>& values() const noexcept { return values_; }

  std::string str() const;

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;

 private:
  std::map<std::string, double> values_;
};

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Per-coordinate open sampling intervals; coordinates without an explicit
/// interval use (-1, 1).
class DomainBox {
 public:
  DomainBox() = default;
  explicit DomainBox(std::map<std::string, Interval> intervals);

  void set(const std::string& name, Interval interval);
  Interval interval(const std::string& name) const;
  const std::map<std::string, Interval>& explicit_intervals() const noexcept { return intervals_; }

  friend bool operator==(const DomainBox&, const DomainBox&) = default;

 private:
  std::map<std::string, Interval> intervals_;
};

/// Seeded point generator. Never shared between threads; every consumer
/// constructs its own from a seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  SamplePoint draw(const DomainBox& box, std::span<const std::string> coords);

  /// Draws `count` points at which every expression evaluates to a finite
  /// value. Points hitting a domain error are redrawn; throws DomainError once
  /// `max_attempts` draws have been spent.
  std::vector<SamplePoint> draw_valid(const DomainBox& box, std::span<const std::string> coords,
                                      std::span<const Expr> exprs, int count, int max_attempts = 0);

 private:
  std::mt19937_64 rng_;
};

double eval(const Expr& e, const SamplePoint& p);

Expr parse_expr(std::string_view text);

/// |a-b| <= tol * (1 + max(|a|, |b|)) at n_points seeded sample points,
/// preceded by a canonical-form comparison of a - b against zero.
bool exprs_equivalent(const Expr& a, const Expr& b, const DomainBox& dom, int n_points = 20,
                      double tol = 1e-9, std::uint64_t seed = 42);

/// Relative residual used by every sampled identity check.
double relative_residual(double lhs, double rhs);

}  // namespace lps::sym
