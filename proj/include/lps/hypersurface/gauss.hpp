#pragma once

#include "lps/hypersurface/immersion.hpp"

namespace lps::hyp {

// nabla_{u_a} u_b = sum_c Gamma~^c_ab u_c + h_ab T
// nabla_{u_a} T   = -sum_b A^b_a u_b + w_a T
struct GaussWeingarten {
  Connection induced;
  TensorField h;
  TensorField A;
  TensorField w;
  AlongField transversal;
};

GaussWeingarten gauss_weingarten(const Immersion& i, const Connection& ambient, const AlongField& t,
                                 const CheckConfig& cfg = {});

/// nabla_{u_a} V along the immersion, V given by ambient components in the parameters.
AlongField covariant_along(const Immersion& i, const Connection& ambient, std::size_t a,
                           const AlongField& v);

/// h_ab = h_ba.
CheckEntry h_symmetry_entry(const GaussWeingarten& gw, const CheckConfig& cfg = {});

}  // namespace lps::hyp
