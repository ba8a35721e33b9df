#pragma once

#include "lps/symexpr/sample.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lps::geo {

using sym::Expr;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DimensionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class UnsupportedSignature : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A linear system or metric that is singular at some probe point.
class SingularError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Ordered coordinate names plus the box used to sample them.
class Chart {
 public:
  explicit Chart(std::vector<std::string> coords, sym::DomainBox domain = {});

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  const sym::DomainBox& domain() const noexcept { return domain_; }

  /// Throws GeometryError for an unknown name.
  std::size_t index_of(std::string_view name) const;
  Expr coordinate(std::size_t i) const { return Expr::symbol(coords_.at(i)); }

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> coords_;
  sym::DomainBox domain_;
};

void require_same_chart(const Chart& a, const Chart& b);

}  // namespace lps::geo
