#pragma once

#include "lps/geometry/tensor.hpp"

#include <Eigen/Dense>

#include <span>

namespace lps::geo {

/// Solves A X = B symbolically by Gaussian elimination.
///
/// A pivot is accepted only if it evaluates away from zero at every probe
/// point; constants are preferred, then the smallest expression. Throws
/// SingularError when a column has no acceptable pivot.
Matrix solve(const Matrix& a, const Matrix& b, std::span<const sym::SamplePoint> probes);

Matrix transpose(const Matrix& m);
Matrix identity_matrix(std::size_t n);

Eigen::MatrixXd evaluate(const Matrix& m, const sym::SamplePoint& p);
Eigen::VectorXd evaluate(std::span<const Expr> v, const sym::SamplePoint& p);

/// Number of singular values above tol * (largest singular value).
int matrix_rank(const Eigen::MatrixXd& m, double tol);

/// Relative least-squares residual of m c = v, scaled by |v| + 1.
double span_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& v);

}  // namespace lps::geo
