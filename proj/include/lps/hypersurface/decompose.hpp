#pragma once

#include "lps/hypersurface/immersion.hpp"

namespace lps::hyp {

/// phi(u_a) = sum_b J^b_a u_b + alpha_a T.
struct Decomposition {
  TensorField J;
  TensorField alpha;
  AlongField transversal;
  CheckEntry reconstruction;
};

/// Throws HypersurfaceError if frame and T are not a basis at every sample point.
Decomposition phi_decompose(const Immersion& i, const contact::AcStructure& s, const AlongField& t,
                            const CheckConfig& cfg = {});

/// C alpha = alpha o J.
TensorField c_operator(const TensorField& alpha, const TensorField& J);

enum class InvarianceTag {
  InvariantTangentXi,
  InvariantTransversalXi,
  NoninvariantTransversalXi,
  NoninvariantTangentXi,
  Mixed,
};

std::string_view invariance_tag_name(InvarianceTag t);

struct Classification {
  InvarianceTag tag = InvarianceTag::Mixed;
  XiPositionResult xi;
  int invariant_points = 0;
  int noninvariant_points = 0;
  std::optional<TensorField> psi;  // only for invariant hypersurfaces
  std::vector<std::string> evidence;

  bool invariant() const noexcept {
    return tag == InvarianceTag::InvariantTangentXi || tag == InvarianceTag::InvariantTransversalXi;
  }
};

Classification classify_invariance(const Immersion& i, const contact::AcStructure& s,
                                   const CheckConfig& cfg = {});

/// (psi, xi*, eta*, g*) on an invariant hypersurface with xi tangent.
struct InvariantStructure {
  TensorField psi;
  TensorField xi_star;
  TensorField eta_star;
  std::optional<TensorField> g_star;
  StructureReport report;

  contact::AcStructure ac() const { return contact::AcStructure(psi, xi_star, eta_star); }
};

/// Throws PreconditionError if xi is not tangent or phi does not preserve the
/// tangent space.
InvariantStructure induced_invariant_structure(const Immersion& i, const contact::AcStructure& s,
                                               const MetricField* g, const CheckConfig& cfg = {});

}  // namespace lps::hyp
