#pragma once

#include "lps/geometry/connection.hpp"
#include "lps/geometry/metric.hpp"
#include "lps/geometry/tensor.hpp"

namespace lps::geo {

// [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k.
TensorField lie_bracket(const TensorField& x, const TensorField& y);

Connection levi_civita(const MetricField& g);

/// nabla_X T for T of signature (1,0), (0,1), (0,2) or (1,1).
TensorField covariant_derivative(const Connection& nabla, const TensorField& t,
                                 const TensorField& x);

/// L_X T for T of signature (1,1) or (0,1).
TensorField lie_derivative(const TensorField& x, const TensorField& t);

// (d beta)_ij = d_i beta_j - d_j beta_i, no 1/2.
TensorField exterior_derivative_1form(const TensorField& beta);

// (b ^ c)_ij = b_i c_j - b_j c_i, no 1/2.
TensorField wedge_1forms(const TensorField& beta, const TensorField& gamma);

int numerical_rank(const TensorField& t, const sym::SamplePoint& p, double tol = 1e-9);

}  // namespace lps::geo
