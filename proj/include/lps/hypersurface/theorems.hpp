#pragma once

#include "lps/hypersurface/decompose.hpp"
#include "lps/hypersurface/gauss.hpp"

namespace lps::hyp {

struct ProductMetric {
  TensorField G;
  TensorField omega;
  StructureReport report;
};

/// G = g + alpha (x) alpha and Omega(X, Y) = G(JX, Y). Checks the symmetry of
/// J under the induced data, C alpha = i^* eta and i^* Phi = Omega - C alpha ^ alpha;
/// whether J is symmetric for G itself is recorded as a finding.
ProductMetric almost_product_metric(const Immersion& i, const contact::LapStructure& s,
                                    const Decomposition& d, const CheckConfig& cfg = {});

/// Identities for a noninvariant hypersurface with xi transversal of a
/// Lorentzian para-Sasakian manifold, using T = xi.
StructureReport verify_noninvariant_lps(const Immersion& i, const contact::LapStructure& s,
                                        const CheckConfig& cfg = {});

/// Induced structure identities for an invariant hypersurface with xi tangent,
/// using the metric normal for the Gauss decomposition.
StructureReport verify_invariant_lps(const Immersion& i, const contact::LapStructure& s,
                                     const CheckConfig& cfg = {});

/// Whether the affine-case identities are asserted or only recorded.
enum class AffineMode { Auto, Assert };

/// Case I (nabla phi = 0, nabla eta = 0) or Case II (normal with phi = nabla xi).
/// In Auto mode the identities are asserted only when T = xi; otherwise they
/// are recorded as findings.
StructureReport verify_affine_case(const Immersion& i, const contact::AcStructure& s,
                                   const Connection& ambient, const TransversalChoice& t,
                                   const MetricField* g = nullptr, const CheckConfig& cfg = {},
                                   AffineMode mode = AffineMode::Auto);

}  // namespace lps::hyp
