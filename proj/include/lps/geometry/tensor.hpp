#pragma once

#include "lps/geometry/chart.hpp"

#include <vector>

namespace lps::geo {

using Matrix = std::vector<std::vector<Expr>>;

/// Dense (r,s) tensor field on a chart.
///
/// Components are stored row-major with the contravariant indices first, so a
/// (1,1) tensor T keeps T^i_j at i*n + j (column j is T(d_j)) and a (1,2)
/// tensor S keeps S^k_ij at k*n*n + i*n + j.
class TensorField {
 public:
  TensorField(Chart chart, int up, int down, std::vector<Expr> components);

  static TensorField zero(const Chart& chart, int up, int down);
  static TensorField identity(const Chart& chart);
  static TensorField vector(const Chart& chart, std::vector<Expr> components);
  static TensorField one_form(const Chart& chart, std::vector<Expr> components);
  /// (1,1) or (0,2) tensor from rows; rows[i][j] is T^i_j or T_ij.
  static TensorField from_matrix(const Chart& chart, int up, int down, const Matrix& rows);

  const Chart& chart() const noexcept { return chart_; }
  std::size_t dim() const noexcept { return chart_.dim(); }
  int up() const noexcept { return up_; }
  int down() const noexcept { return down_; }
  int rank() const noexcept { return up_ + down_; }
  bool has_signature(int up, int down) const noexcept { return up_ == up && down_ == down; }

  const std::vector<Expr>& components() const noexcept { return components_; }
  const Expr& operator[](std::size_t flat) const { return components_.at(flat); }
  Expr& operator[](std::size_t flat) { return components_.at(flat); }

  const Expr& at(std::size_t i) const { return components_.at(i); }
  const Expr& at(std::size_t i, std::size_t j) const { return components_.at(i * dim() + j); }
  const Expr& at(std::size_t i, std::size_t j, std::size_t k) const {
    return components_.at((i * dim() + j) * dim() + k);
  }
  Expr& at(std::size_t i, std::size_t j) { return components_.at(i * dim() + j); }

  Matrix matrix() const;

 private:
  Chart chart_;
  int up_;
  int down_;
  std::vector<Expr> components_;
};

void require_signature(const TensorField& t, int up, int down, const char* what);

TensorField operator+(const TensorField& a, const TensorField& b);
TensorField operator-(const TensorField& a, const TensorField& b);
TensorField operator*(const Expr& f, const TensorField& t);

/// T(X) for a (1,1) tensor.
TensorField apply(const TensorField& t, const TensorField& x);
/// (A B)^i_j = A^i_k B^k_j.
TensorField compose(const TensorField& a, const TensorField& b);
/// beta o T for a 1-form and a (1,1) tensor.
TensorField pullback(const TensorField& beta, const TensorField& t);
Expr contract(const TensorField& beta, const TensorField& x);
/// b(X, Y) for a (0,2) tensor.
Expr evaluate(const TensorField& b, const TensorField& x, const TensorField& y);
/// S(X, Y) for a (1,2) tensor.
TensorField evaluate_vector(const TensorField& s, const TensorField& x, const TensorField& y);
/// X_flat with components g_ij X^j.
TensorField lower(const TensorField& g, const TensorField& x);
/// Outer product; contravariant indices of a, then of b, then covariant of a, then of b.
TensorField tensor_product(const TensorField& a, const TensorField& b);

/// Coordinate vector field d_i.
TensorField basis_vector(const Chart& chart, std::size_t i);
/// X(f) = X^i d_i f.
Expr directional(const TensorField& x, const Expr& f);

TensorField substitute(const TensorField& t, const std::vector<std::pair<std::string, Expr>>& bindings);

}  // namespace lps::geo
