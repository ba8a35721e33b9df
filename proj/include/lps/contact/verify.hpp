#pragma once

#include "lps/contact/structure.hpp"

namespace lps::contact {

// Every verifier checks identities on the coordinate frame. A verifier that
// depends on an earlier one records a "pre:" entry instead of assuming it.

/// phi xi = 0, phi^2 = e1 I + e2 eta (x) xi, eta o phi = 0, eta(xi) = -e1 e2,
/// and rank phi = n - 1 at the sample points.
StructureReport verify_ac(const AcStructure& s, const CheckConfig& cfg = {});

/// eta = g(., xi), g(phi X, phi Y) = g(X, Y) + eta(X) eta(Y), Phi symmetric,
/// g(xi, xi) = -1, Lorentzian signature, and
/// (nabla_X Phi)(Y, Z) = g(Y, (nabla_X phi) Z).
StructureReport verify_lap(const LapStructure& s, const CheckConfig& cfg = {});

/// Phi(X, Y) = ((nabla_X eta) Y + (nabla_Y eta) X) / 2.
StructureReport verify_lp_contact(const LapStructure& s, const CheckConfig& cfg = {});

/// (nabla_X phi) Y = eta(Y) X + g(X, Y) xi + 2 eta(X) eta(Y) xi, plus d eta = 0
/// and nabla xi = phi.
StructureReport verify_lp_sasakian(const LapStructure& s, const CheckConfig& cfg = {});

/// nabla phi = 0 and nabla eta = 0; when both hold, also nabla xi = 0 and S = 0.
StructureReport verify_affinely_cosymplectic(const AcStructure& s, const Connection& nabla,
                                             const CheckConfig& cfg = {});

/// Reports (without asserting) whether L_xi phi = 0 and L_xi eta = 0.
StructureReport xi_automorphism_check(const AcStructure& s, const CheckConfig& cfg = {});

}  // namespace lps::contact
