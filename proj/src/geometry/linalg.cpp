#include "lps/geometry/linalg.hpp"

#include <cmath>
#include <optional>

namespace lps::geo {

namespace {

constexpr double kPivotFloor = 1e-10;

bool nonzero_everywhere(const Expr& e, std::span<const sym::SamplePoint> probes) {
  if (e.is_zero()) return false;
  if (e.is_constant()) return true;
  for (const auto& p : probes) {
    try {
      if (std::abs(sym::eval(e, p)) < kPivotFloor) return false;
    } catch (const sym::EvalError&) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> choose_pivot(const Matrix& a, std::size_t col,
                                        std::span<const sym::SamplePoint> probes) {
  std::optional<std::size_t> best;
  for (std::size_t r = col; r < a.size(); ++r) {
    const Expr& e = a[r][col];
    if (!nonzero_everywhere(e, probes)) continue;
    if (!best) {
      best = r;
      continue;
    }
    const Expr& cur = a[*best][col];
    const bool better = (e.is_constant() && !cur.is_constant()) ||
                        (e.is_constant() == cur.is_constant() && e.size() < cur.size());
    if (better) best = r;
  }
  return best;
}

}  // namespace

Matrix solve(const Matrix& a_in, const Matrix& b_in, std::span<const sym::SamplePoint> probes) {
  const std::size_t n = a_in.size();
  if (b_in.size() != n) throw DimensionError("solve: row count mismatch");
  for (const auto& r : a_in) {
    if (r.size() != n) throw DimensionError("solve: matrix must be square");
  }
  const std::size_t k = n == 0 ? 0 : b_in.front().size();
  for (const auto& r : b_in) {
    if (r.size() != k) throw DimensionError("solve: ragged right-hand side");
  }

  Matrix a = a_in;
  Matrix b = b_in;
  for (std::size_t col = 0; col < n; ++col) {
    const auto pivot = choose_pivot(a, col, probes);
    if (!pivot) throw SingularError("singular system: no usable pivot in column " + std::to_string(col));
    std::swap(a[col], a[*pivot]);
    std::swap(b[col], b[*pivot]);

    const Expr inv = sym::pow(a[col][col], -1);
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
    for (std::size_t j = 0; j < k; ++j) b[col][j] = b[col][j] * inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Expr f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
      for (std::size_t j = 0; j < k; ++j) b[r][j] = b[r][j] - f * b[col][j];
    }
  }
  return b;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m.front().size(), std::vector<Expr>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Expr(1);
  return m;
}

Eigen::MatrixXd evaluate(const Matrix& m, const sym::SamplePoint& p) {
  const auto rows = static_cast<Eigen::Index>(m.size());
  const auto cols = static_cast<Eigen::Index>(m.empty() ? 0 : m.front().size());
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = sym::eval(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
    }
  }
  return out;
}

Eigen::VectorXd evaluate(std::span<const Expr> v, const sym::SamplePoint& p) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = sym::eval(v[i], p);
  return out;
}

int matrix_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++r;
  }
  return r;
}

double span_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& v) {
  const Eigen::VectorXd c = m.colPivHouseholderQr().solve(v);
  return (m * c - v).norm() / (1.0 + v.norm());
}

}  // namespace lps::geo
