#pragma once

#include "lps/contact/structure.hpp"
#include "lps/geometry/check.hpp"

namespace lps::contact {

/// [phi, phi](X, Y) = [phi X, phi Y] - phi[phi X, Y] - phi[X, phi Y] + phi^2 [X, Y].
/// Component S^k_ij is the k-th component on (d_i, d_j).
TensorField nijenhuis(const TensorField& phi);

/// S = [phi, phi] + d eta (x) xi.
TensorField normality_tensor(const AcStructure& s);

/// The same tensor written with a torsion-free connection instead of brackets:
/// (nabla_{phi X} phi) Y - (nabla_{phi Y} phi) X + phi (nabla_Y phi) X
/// - phi (nabla_X phi) Y + ((nabla_X eta) Y - (nabla_Y eta) X) xi.
TensorField normality_tensor(const AcStructure& s, const Connection& nabla);

/// S == 0 on every component.
geo::CheckEntry normality_entry(const AcStructure& s, const CheckConfig& cfg = {},
                                std::string id = "2.13");

}  // namespace lps::contact
