#include "lps/hypersurface/theorems.hpp"

#include "lps/contact/normality.hpp"
#include "lps/contact/verify.hpp"
#include "lps/geometry/operators.hpp"

namespace lps::hyp {

namespace {

using geo::EntryKind;
using geo::ExprPair;

std::string u(std::size_t a) { return "u" + std::to_string(a + 1); }

Expr delta(std::size_t a, std::size_t b) { return a == b ? Expr(1) : Expr(0); }

CheckEntry precondition(std::string id, std::string what, bool holds, std::string note = {}) {
  CheckEntry e;
  e.id = std::move(id);
  e.identity = std::move(what);
  e.holds = holds;
  if (!holds) e.note = std::move(note);
  return e;
}

CheckEntry precondition(std::string id, std::string what, const StructureReport& r) {
  std::string failing;
  for (const auto& x : r.entries) {
    if (x.ok()) continue;
    if (!failing.empty()) failing += ", ";
    failing += x.id;
  }
  return precondition(std::move(id), std::move(what), r.passed(), "violated: " + failing);
}

bool identically_zero(const TensorField& t) {
  for (const auto& c : t.components()) {
    if (!c.is_zero()) return false;
  }
  return true;
}

/// Pairs lhs^c_a == rhs^c_a for (1,1) tensors on the parameter chart.
std::vector<ExprPair> endo_pairs(const TensorField& lhs, const TensorField& rhs, const std::string& label) {
  std::vector<ExprPair> pairs;
  const std::size_t m = lhs.dim();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      pairs.push_back({lhs.at(c, a), rhs.at(c, a), label + "(" + u(a) + ")^" + u(c)});
    }
  }
  return pairs;
}

std::vector<ExprPair> form_pairs(const TensorField& lhs, const TensorField& rhs, const std::string& label) {
  std::vector<ExprPair> pairs;
  for (std::size_t a = 0; a < lhs.dim(); ++a) pairs.push_back({lhs.at(a), rhs.at(a), label + "(" + u(a) + ")"});
  return pairs;
}

TensorField nabla_along(const Connection& c, const TensorField& t, std::size_t a) {
  return geo::covariant_derivative(c, t, geo::basis_vector(c.chart(), a));
}

/// i^* of an ambient (0,2) tensor.
TensorField pull_bilinear(const Immersion& i, const TensorField& b, const std::vector<AlongField>& frame) {
  const Matrix bp = i.pull_matrix(b);
  const std::size_t m = frame.size();
  const std::size_t n = m + 1;
  Matrix rows(m, std::vector<Expr>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) terms.push_back(bp[k][j] * frame[a][k] * frame[c][j]);
      }
      rows[a][c] = sym::sum(terms);
    }
  }
  return TensorField::from_matrix(i.params(), 0, 2, rows);
}

TensorField pull_form(const Immersion& i, const TensorField& beta, const std::vector<AlongField>& frame) {
  std::vector<Expr> out;
  for (const auto& ua : frame) {
    std::vector<Expr> terms;
    for (std::size_t k = 0; k < ua.size(); ++k) terms.push_back(i.pull(beta.at(k)) * ua[k]);
    out.push_back(sym::sum(terms));
  }
  return TensorField::one_form(i.params(), std::move(out));
}

void prefixed(StructureReport& into, const StructureReport& from, const std::string& prefix) {
  for (auto e : from.entries) {
    e.id = prefix + e.id;
    into.entries.push_back(std::move(e));
  }
  for (const auto& n : from.notes) into.notes.push_back(prefix + n);
}

}  // namespace

ProductMetric almost_product_metric(const Immersion& i, const contact::LapStructure& s, const Decomposition& d,
                                    const CheckConfig& cfg) {
  const Chart& params = i.params();
  const std::size_t m = params.dim();
  const auto frame = tangent_frame(i, cfg);
  const TensorField g = pull_bilinear(i, s.metric().tensor(), frame);
  const TensorField& J = d.J;
  const TensorField& alpha = d.alpha;

  const TensorField G = g + geo::tensor_product(alpha, alpha);
  Matrix omega(m, std::vector<Expr>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Expr> terms;
      for (std::size_t c = 0; c < m; ++c) terms.push_back(J.at(c, a) * G.at(c, b));
      omega[a][b] = sym::sum(terms);
    }
  }
  ProductMetric out{G, TensorField::from_matrix(params, 0, 2, omega), {}};
  StructureReport& r = out.report;
  r.title = "almost product metric";
  if (identically_zero(alpha)) r.notes.push_back("alpha = 0: G = g and i^*Phi = Omega");

  const TensorField c_alpha = c_operator(alpha, J);
  {
    std::vector<ExprPair> derived, printed;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<Expr> gjx, gjy, gjy_big;
        for (std::size_t c = 0; c < m; ++c) {
          gjx.push_back(J.at(c, a) * g.at(c, b));
          gjy.push_back(g.at(a, c) * J.at(c, b));
          gjy_big.push_back(G.at(a, c) * J.at(c, b));
        }
        const std::string label = "(" + u(a) + ", " + u(b) + ")";
        derived.push_back({sym::sum(gjx) + alpha.at(a) * c_alpha.at(b), sym::sum(gjy) + alpha.at(b) * c_alpha.at(a),
                           label});
        printed.push_back({omega[a][b], sym::sum(gjy_big), "G(J " + u(a) + ", " + u(b) + ")"});
      }
    }
    r.entries.push_back(geo::check_identity(
        "5.1", "g(JX, Y) + alpha(X) C alpha(Y) = g(X, JY) + alpha(Y) C alpha(X)", derived, params, cfg));
    CheckEntry e = geo::check_identity("5.1-printed", "G(JX, Y) = G(X, JY) for G = g + alpha (x) alpha", printed,
                                       params, cfg, EntryKind::Finding);
    e.note = "holds iff C alpha ^ alpha = 0; 5.1 is compatibility of g - alpha (x) alpha";
    r.entries.push_back(std::move(e));
  }
  const TensorField eta_pulled = pull_form(i, s.ac().eta(), frame);
  r.entries.push_back(
      geo::check_identity("3.3", "C alpha = i^* eta", form_pairs(c_alpha, eta_pulled, "C alpha"), params, cfg));
  {
    const TensorField phi_pulled = pull_bilinear(i, s.fundamental_form(), frame);
    const TensorField rhs = out.omega - geo::wedge_1forms(c_alpha, alpha);
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        pairs.push_back({phi_pulled.at(a, b), rhs.at(a, b), "i^*Phi(" + u(a) + ", " + u(b) + ")"});
      }
    }
    r.entries.push_back(
        geo::check_identity("lemma-5.4", "i^*Phi = Omega - C alpha ^ alpha", pairs, params, cfg));
  }
  return out;
}

StructureReport verify_noninvariant_lps(const Immersion& i, const contact::LapStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "noninvariant hypersurface of an LP-Sasakian manifold (T = xi)";
  const Chart& params = i.params();
  const std::size_t m = params.dim();

  r.entries.push_back(precondition("pre:lp-sasakian", "ambient is LP-Sasakian", contact::verify_lp_sasakian(s, cfg)));
  const XiPositionResult pos = xi_position(i, s.ac().xi(), cfg);
  if (pos.position != XiPosition::Transversal) {
    r.entries.push_back(precondition("pre:xi-transversal", "xi is transversal", false,
                                     "xi is " + std::string(xi_position_name(pos.position))));
    return r;
  }
  const AlongField t = i.pull(s.ac().xi());
  const Decomposition d = phi_decompose(i, s.ac(), t, cfg);
  r.entries.push_back(d.reconstruction);
  if (identically_zero(d.alpha)) {
    r.entries.push_back(precondition("pre:noninvariant", "alpha != 0", false, "alpha = 0"));
    r.notes.push_back("alpha = 0: theorems vacuous");
    return r;
  }

  const GaussWeingarten gw = gauss_weingarten(i, s.connection(), t, cfg);
  const TensorField& J = d.J;
  const TensorField& alpha = d.alpha;
  const TensorField c_alpha = c_operator(alpha, J);
  const TensorField id = TensorField::identity(params);

  r.entries.push_back(geo::check_identity("3.1", "J^2 = I", endo_pairs(geo::compose(J, J), id, "J^2"), params, cfg));
  r.entries.push_back(geo::check_identity("C-involution", "(C o C) alpha = alpha",
                                          form_pairs(c_operator(c_alpha, J), alpha, "C^2 alpha"), params, cfg));
  r.entries.push_back(geo::check_identity("5.5a", "J = -A", endo_pairs(J, Expr(-1) * gw.A, "J"), params, cfg));
  r.entries.push_back(geo::check_identity("5.5b", "alpha = w", form_pairs(alpha, gw.w, "alpha"), params, cfg));
  r.entries.push_back(h_symmetry_entry(gw, cfg));

  std::vector<TensorField> nabla_j, nabla_alpha;
  for (std::size_t a = 0; a < m; ++a) {
    nabla_j.push_back(nabla_along(gw.induced, J, a));
    nabla_alpha.push_back(nabla_along(gw.induced, alpha, a));
  }
  {
    std::vector<ExprPair> derived, printed;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          const Expr lhs = nabla_j[a].at(c, b);
          const Expr rhs = c_alpha.at(b) * delta(c, a) - alpha.at(b) * J.at(c, a);
          const std::string label = "(nabla_" + u(a) + " J)(" + u(b) + ")^" + u(c);
          derived.push_back({lhs, rhs, label});
          printed.push_back({lhs, -rhs, label});
        }
      }
    }
    r.entries.push_back(geo::check_identity("5.6a", "(nabla_X J) Y = C alpha(Y) X - alpha(Y) JX", derived, params, cfg));
    CheckEntry p = geo::check_identity("5.6a-printed", "(nabla_X J) Y = alpha(Y) JX - C alpha(Y) X", printed, params,
                                       cfg, EntryKind::Finding);
    p.note = "opposite sign to 5.6a; both agree only where 5.9 holds";
    r.entries.push_back(std::move(p));
  }
  {
    const auto frame = tangent_frame(i, cfg);
    const TensorField g = pull_bilinear(i, s.metric().tensor(), frame);
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<Expr> rhs{nabla_alpha[a].at(b), alpha.at(a) * alpha.at(b)};
        for (std::size_t c = 0; c < m; ++c) rhs.push_back(gw.h.at(a, c) * J.at(c, b));
        pairs.push_back({g.at(a, b) + Expr(2) * c_alpha.at(a) * c_alpha.at(b), sym::sum(rhs),
                         "(" + u(a) + ", " + u(b) + ")"});
      }
    }
    r.entries.push_back(geo::check_identity(
        "5.6b", "g(i_*X, i_*Y) + 2 C alpha(X) C alpha(Y) = h(X, JY) + (nabla_X alpha) Y + alpha(X) alpha(Y)", pairs,
        params, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          pairs.push_back({alpha.at(b) * J.at(c, a), c_alpha.at(b) * delta(c, a),
                           "alpha(" + u(b) + ") J(" + u(a) + ") vs alpha(J " + u(b) + ") " + u(a) + ", component " +
                               u(c)});
        }
      }
    }
    r.entries.push_back(geo::check_identity("5.9", "alpha(Y) JX = alpha(JY) X", pairs, params, cfg, EntryKind::Finding));
  }

  r.append(almost_product_metric(i, s, d, cfg).report);

  if (contact::normality_entry(s.ac(), cfg).holds) {
    const TensorField nj = contact::nijenhuis(J);
    std::vector<ExprPair> tangential;
    for (std::size_t k = 0; k < nj.components().size(); ++k) tangential.push_back({nj[k], Expr(0), "[J,J]#" + std::to_string(k)});
    r.entries.push_back(geo::check_identity("3.8", "S = 0 gives [J, J] = 0", tangential, params, cfg));

    const TensorField da = geo::exterior_derivative_1form(alpha);
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<Expr> terms;
        for (std::size_t c = 0; c < m; ++c) {
          terms.push_back(J.at(c, a) * da.at(c, b));
          terms.push_back(J.at(c, b) * da.at(a, c));
        }
        pairs.push_back({sym::sum(terms), Expr(0), "(" + u(a) + ", " + u(b) + ")"});
      }
    }
    CheckEntry e = geo::check_identity("3.9", "d alpha(JX, Y) + d alpha(X, JY) = 2 C alpha([X, Y])", pairs, params, cfg);
    e.note = "coordinate frame, where [X, Y] = 0";
    r.entries.push_back(std::move(e));
  } else {
    r.notes.push_back("ambient structure is not normal; 3.8 and 3.9 not checked");
  }
  return r;
}

StructureReport verify_invariant_lps(const Immersion& i, const contact::LapStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "invariant hypersurface of an LP-Sasakian manifold (T = metric normal)";
  const Chart& params = i.params();
  const std::size_t m = params.dim();

  r.entries.push_back(precondition("pre:lp-sasakian", "ambient is LP-Sasakian", contact::verify_lp_sasakian(s, cfg)));
  std::optional<InvariantStructure> inv;
  try {
    inv = induced_invariant_structure(i, s.ac(), &s.metric(), cfg);
  } catch (const PreconditionError& err) {
    r.entries.push_back(precondition("pre:invariant-tangent", "invariant with xi tangent", false, err.what()));
    return r;
  }
  AlongField normal;
  try {
    normal = metric_normal(i, s.metric(), cfg);
  } catch (const HypersurfaceError& err) {
    r.entries.push_back(precondition("pre:metric-normal", "metric normal is transversal", false, err.what()));
    return r;
  }
  r.append(inv->report);

  const GaussWeingarten gw = gauss_weingarten(i, s.connection(), normal, cfg);
  r.entries.push_back(h_symmetry_entry(gw, cfg));
  const TensorField& psi = inv->psi;
  const TensorField& xs = inv->xi_star;
  const TensorField& es = inv->eta_star;
  const TensorField& gs = *inv->g_star;

  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      const TensorField d = nabla_along(gw.induced, xs, a);
      for (std::size_t c = 0; c < m; ++c) pairs.push_back({d.at(c), psi.at(c, a), "nabla_" + u(a) + " xi*^" + u(c)});
    }
    r.entries.push_back(geo::check_identity("5.10-nabla-xi", "nabla_X xi* = psi X", pairs, params, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<Expr> terms;
      for (std::size_t b = 0; b < m; ++b) terms.push_back(gw.h.at(a, b) * xs.at(b));
      pairs.push_back({sym::sum(terms), Expr(0), "h(" + u(a) + ", xi*)"});
    }
    r.entries.push_back(geo::check_identity("5.10-h-xi", "h(X, xi*) = 0", pairs, params, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      const TensorField d = nabla_along(gw.induced, psi, a);
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          const Expr rhs = es.at(b) * delta(c, a) + gs.at(a, b) * xs.at(c) + Expr(2) * es.at(a) * es.at(b) * xs.at(c);
          pairs.push_back({d.at(c, b), rhs, "(nabla_" + u(a) + " psi)(" + u(b) + ")^" + u(c)});
        }
      }
    }
    r.entries.push_back(geo::check_identity(
        "5.10-nabla-psi", "(nabla_X psi) Y = eta*(Y) X + g*(X, Y) xi* + 2 eta*(X) eta*(Y) xi*", pairs, params, cfg));
  }
  try {
    const MetricField g_star(gs, cfg);
    const Connection lc = geo::levi_civita(g_star);
    std::vector<ExprPair> pairs;
    for (std::size_t k = 0; k < lc.coefficients().size(); ++k) {
      pairs.push_back({gw.induced.coefficients()[k], lc.coefficients()[k], "Gamma#" + std::to_string(k)});
    }
    r.entries.push_back(geo::check_identity("gauss-lc", "Gauss connection = Levi-Civita of g*", pairs, params, cfg));
    const contact::LapStructure induced(inv->ac(), g_star);
    prefixed(r, contact::verify_lp_sasakian(induced, cfg), "lps:");
  } catch (const geo::GeometryError& err) {
    r.entries.push_back(precondition("pre:induced-metric", "induced metric is nondegenerate", false, err.what()));
  }
  return r;
}

StructureReport verify_affine_case(const Immersion& i, const contact::AcStructure& s, const Connection& ambient,
                                   const TransversalChoice& choice, const MetricField* g, const CheckConfig& cfg,
                                   AffineMode mode) {
  StructureReport r;
  r.title = "hypersurface of an affinely cosymplectic or normal manifold";
  const Chart& params = i.params();
  const std::size_t m = params.dim();

  if (!ambient.torsion_free()) {
    r.entries.push_back(precondition("pre:torsion-free", "ambient connection is torsion-free", false, "torsion"));
    return r;
  }

  const StructureReport cosym = contact::verify_affinely_cosymplectic(s, ambient, cfg);
  bool case_one = cosym.passed();
  bool case_two = false;
  if (!case_one) {
    std::vector<ExprPair> pairs;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const TensorField d = geo::covariant_derivative(ambient, s.xi(), geo::basis_vector(s.chart(), j));
      for (std::size_t k = 0; k < s.dim(); ++k) {
        pairs.push_back({d.at(k), s.phi().at(k, j), "nabla_" + s.chart().coords()[j] + " xi^" + s.chart().coords()[k]});
      }
    }
    case_two = contact::normality_entry(s, cfg).holds &&
               geo::check_identity("phi-nabla-xi", "phi = nabla xi", pairs, s.chart(), cfg).holds;
  }
  if (!case_one && !case_two) {
    r.notes.push_back("not applicable: neither nabla phi = 0, nabla eta = 0 nor (normal and phi = nabla xi) holds");
    return r;
  }
  r.notes.push_back(case_one ? "Case I: nabla phi = 0 and nabla eta = 0" : "Case II: normal with phi = nabla xi");

  AlongField t;
  std::optional<Decomposition> d;
  std::optional<GaussWeingarten> gw;
  try {
    t = resolve_transversal(i, s, choice, g, cfg);
    d = phi_decompose(i, s, t, cfg);
    gw = gauss_weingarten(i, ambient, t, cfg);
  } catch (const HypersurfaceError& err) {
    r.entries.push_back(precondition("pre:transversal", "transversal field", false, err.what()));
    return r;
  }
  r.notes.push_back("transversal: " + std::string(transversal_name(choice.kind)));
  const bool asserted = mode == AffineMode::Assert || choice.kind == TransversalKind::Characteristic;
  const EntryKind kind = asserted ? EntryKind::Identity : EntryKind::Finding;
  if (!asserted) r.notes.push_back("T is not xi: identities recorded as findings");

  r.entries.push_back(d->reconstruction);
  r.entries.push_back(h_symmetry_entry(*gw, cfg));
  const TensorField& J = d->J;
  const TensorField& alpha = d->alpha;
  const bool invariant = identically_zero(alpha);
  const TensorField zero11 = TensorField::zero(params, 1, 1);
  const TensorField zero01 = TensorField::zero(params, 0, 1);

  auto nabla_j_entry = [&](const std::string& id) {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      auto more = endo_pairs(nabla_along(gw->induced, J, a), zero11, "(nabla_" + u(a) + " J)");
      pairs.insert(pairs.end(), more.begin(), more.end());
    }
    return geo::check_identity(id, "nabla J = 0", pairs, params, cfg, kind);
  };

  if (case_one) {
    if (!invariant) {
      r.entries.push_back(geo::check_identity("4.1-A", "A = 0", endo_pairs(gw->A, zero11, "A"), params, cfg, kind));
      r.entries.push_back(geo::check_identity("4.1-w", "w = 0", form_pairs(gw->w, zero01, "w"), params, cfg, kind));
      r.entries.push_back(nabla_j_entry("4.1-nablaJ"));
      std::vector<ExprPair> pairs;
      for (std::size_t a = 0; a < m; ++a) {
        const TensorField da = nabla_along(gw->induced, alpha, a);
        for (std::size_t b = 0; b < m; ++b) {
          std::vector<Expr> rhs;
          for (std::size_t c = 0; c < m; ++c) rhs.push_back(-(gw->h.at(a, c) * J.at(c, b)));
          pairs.push_back({da.at(b), sym::sum(rhs), "(nabla_" + u(a) + " alpha)(" + u(b) + ")"});
        }
      }
      r.entries.push_back(
          geo::check_identity("4.1-nabla-alpha", "(nabla_X alpha) Y = -h(X, JY)", pairs, params, cfg, kind));
    } else {
      r.entries.push_back(nabla_j_entry("4.2-nablaJ"));
      std::vector<ExprPair> hp;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) hp.push_back({gw->h.at(a, b), Expr(0), "h(" + u(a) + ", " + u(b) + ")"});
      }
      r.entries.push_back(geo::check_identity("4.2-h", "h = 0", hp, params, cfg, kind));
      r.entries.push_back(geo::check_identity("4.2-w", "w = 0", form_pairs(gw->w, zero01, "w"), params, cfg, kind));
    }
  } else {
    r.entries.push_back(geo::check_identity("4.3-J", "J = -A", endo_pairs(J, Expr(-1) * gw->A, "J"), params, cfg, kind));
    r.entries.push_back(geo::check_identity("4.3-alpha", "alpha = w", form_pairs(alpha, gw->w, "alpha"), params, cfg, kind));
  }
  return r;
}

}  // namespace lps::hyp
