#include "lps/hypersurface/decompose.hpp"

#include "lps/contact/normality.hpp"
#include "lps/contact/verify.hpp"
#include "lps/geometry/linalg.hpp"

#include <map>

namespace lps::hyp {

namespace {

constexpr double kRankTol = 1e-9;

using geo::ExprPair;

AlongField mat_vec(const Matrix& m, const AlongField& v) {
  AlongField out(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < v.size(); ++j) terms.push_back(m[k][j] * v[j]);
    out[k] = sym::sum(terms);
  }
  return out;
}

std::vector<Expr> flatten(const Matrix& m) {
  std::vector<Expr> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string u(std::size_t a) { return "u" + std::to_string(a + 1); }

}  // namespace

Decomposition phi_decompose(const Immersion& i, const contact::AcStructure& s, const AlongField& t,
                            const CheckConfig& cfg) {
  geo::require_same_chart(s.chart(), i.ambient());
  const auto frame = tangent_frame(i, cfg);
  const std::size_t m = frame.size();
  const std::size_t n = m + 1;
  const Matrix phi = i.pull_matrix(s.phi());

  Matrix rhs(n, std::vector<Expr>(m));
  std::vector<AlongField> images;
  for (std::size_t a = 0; a < m; ++a) {
    images.push_back(mat_vec(phi, frame[a]));
    for (std::size_t k = 0; k < n; ++k) rhs[k][a] = images.back()[k];
  }
  const Matrix c = decompose_in_basis(i.params(), frame_matrix(frame, &t), rhs, cfg, "phi_decompose");

  Matrix j(m, std::vector<Expr>(m));
  std::vector<Expr> alpha(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) j[b][a] = sym::simplify(c[b][a]);
    alpha[a] = sym::simplify(c[m][a]);
  }

  std::vector<ExprPair> pairs;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Expr> terms{alpha[a] * t[k]};
      for (std::size_t b = 0; b < m; ++b) terms.push_back(j[b][a] * frame[b][k]);
      pairs.push_back({images[a][k], sym::sum(terms), "phi(" + u(a) + ")^" + i.ambient().coords()[k]});
    }
  }
  return Decomposition{
      TensorField::from_matrix(i.params(), 1, 1, j),
      TensorField::one_form(i.params(), alpha),
      t,
      geo::check_identity("3.1-reconstruction", "phi(u_a) = J(u_a) + alpha(u_a) T", pairs, i.params(), cfg),
  };
}

TensorField c_operator(const TensorField& alpha, const TensorField& J) { return geo::pullback(alpha, J); }

std::string_view invariance_tag_name(InvarianceTag t) {
  switch (t) {
    case InvarianceTag::InvariantTangentXi: return "invariant-tangent-xi";
    case InvarianceTag::InvariantTransversalXi: return "invariant-transversal-xi";
    case InvarianceTag::NoninvariantTransversalXi: return "noninvariant-transversal-xi";
    case InvarianceTag::NoninvariantTangentXi: return "noninvariant-tangent-xi";
    case InvarianceTag::Mixed: return "mixed";
  }
  return "?";
}

Classification classify_invariance(const Immersion& i, const contact::AcStructure& s, const CheckConfig& cfg) {
  geo::require_same_chart(s.chart(), i.ambient());
  Classification out;
  out.xi = xi_position(i, s.xi(), cfg);

  const auto frame = tangent_frame(i, cfg);
  const Matrix phi = i.pull_matrix(s.phi());
  const Matrix fm = frame_matrix(frame);
  std::vector<AlongField> images;
  std::vector<Expr> exprs = flatten(fm);
  for (const auto& ua : frame) {
    images.push_back(mat_vec(phi, ua));
    exprs.insert(exprs.end(), images.back().begin(), images.back().end());
  }

  std::vector<std::pair<bool, std::string>> per_point;
  for (const auto& p : geo::sample_points(i.params(), cfg, exprs)) {
    const Eigen::MatrixXd f = geo::evaluate(fm, p);
    bool inv = true;
    double worst = 0.0;
    for (const auto& img : images) {
      const double r = geo::span_residual(f, geo::evaluate(img, p));
      worst = std::max(worst, r);
      inv = inv && r <= kRankTol;
    }
    (inv ? out.invariant_points : out.noninvariant_points)++;
    per_point.emplace_back(inv, p.str());
  }

  const bool all_inv = out.noninvariant_points == 0;
  const bool none_inv = out.invariant_points == 0;
  if (all_inv && out.xi.position == XiPosition::Tangent) {
    out.tag = InvarianceTag::InvariantTangentXi;
  } else if (all_inv && out.xi.position == XiPosition::Transversal) {
    out.tag = InvarianceTag::InvariantTransversalXi;
  } else if (none_inv && out.xi.position == XiPosition::Transversal) {
    out.tag = InvarianceTag::NoninvariantTransversalXi;
  } else if (none_inv && out.xi.position == XiPosition::Tangent) {
    out.tag = InvarianceTag::NoninvariantTangentXi;
  } else {
    out.tag = InvarianceTag::Mixed;
  }

  out.evidence.push_back("phi(TM) in TM at " + std::to_string(out.invariant_points) + " of " +
                         std::to_string(per_point.size()) + " points");
  out.evidence.push_back("xi tangent at " + std::to_string(out.xi.tangent_points) + " of " +
                         std::to_string(out.xi.tangent_points + out.xi.transversal_points) + " points");
  if (!all_inv && !none_inv) {
    for (const auto& [inv, where] : per_point) {
      if (!inv) out.evidence.push_back("phi(TM) leaves TM at " + where);
    }
  }
  for (const auto& w : out.xi.witnesses) out.evidence.push_back("xi " + w);

  if (out.tag == InvarianceTag::InvariantTransversalXi) {
    out.psi = phi_decompose(i, s, i.pull(s.xi()), cfg).J;
  } else if (out.tag == InvarianceTag::InvariantTangentXi) {
    out.psi = induced_invariant_structure(i, s, nullptr, cfg).psi;
  }
  return out;
}

InvariantStructure induced_invariant_structure(const Immersion& i, const contact::AcStructure& s,
                                               const MetricField* g, const CheckConfig& cfg) {
  geo::require_same_chart(s.chart(), i.ambient());
  if (xi_position(i, s.xi(), cfg).position != XiPosition::Tangent) {
    throw PreconditionError("xi is not tangent; the induced invariant structure requires xi in TM");
  }
  const auto frame = tangent_frame(i, cfg);
  const std::size_t m = frame.size();
  const std::size_t n = m + 1;
  const Chart& params = i.params();
  const Matrix phi = i.pull_matrix(s.phi());
  const AlongField xi = i.pull(s.xi());
  AlongField eta;
  for (const auto& c : s.eta().components()) eta.push_back(i.pull(c));

  // Complete the frame with the last coordinate field that makes it a basis.
  std::vector<Expr> frame_exprs = flatten(frame_matrix(frame));
  const auto probes = geo::sample_points(params, cfg, frame_exprs);
  std::optional<AlongField> completion;
  for (std::size_t k = n; k-- > 0 && !completion;) {
    AlongField e(n, Expr(0));
    e[k] = Expr(1);
    const Matrix b = frame_matrix(frame, &e);
    bool ok = true;
    for (const auto& p : probes) ok = ok && geo::matrix_rank(geo::evaluate(b, p), kRankTol) == static_cast<int>(n);
    if (ok) completion = e;
  }
  if (!completion) throw HypersurfaceError("no coordinate field completes the tangent frame");

  Matrix rhs(n, std::vector<Expr>(m + 1));
  std::vector<AlongField> images;
  for (std::size_t a = 0; a < m; ++a) {
    images.push_back(mat_vec(phi, frame[a]));
    for (std::size_t k = 0; k < n; ++k) rhs[k][a] = images.back()[k];
  }
  for (std::size_t k = 0; k < n; ++k) rhs[k][m] = xi[k];
  const Matrix c = decompose_in_basis(params, frame_matrix(frame, &*completion), rhs, cfg, "invariant structure");

  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) pairs.push_back({c[m][a], Expr(0), "normal part of phi(" + u(a) + ")"});
    const CheckEntry e = geo::check_identity("5.10", "phi(TM) in TM", pairs, params, cfg);
    if (!e.holds) {
      throw PreconditionError("phi does not preserve the tangent space: " +
                              (e.witness.empty() ? e.note : e.witness));
    }
  }

  InvariantStructure out{
      TensorField::zero(params, 1, 1), TensorField::zero(params, 1, 0), TensorField::zero(params, 0, 1),
      std::nullopt, {}};
  Matrix psi(m, std::vector<Expr>(m));
  std::vector<Expr> xi_star(m), eta_star(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) psi[b][a] = sym::simplify(c[b][a]);
    xi_star[a] = sym::simplify(c[a][m]);
    std::vector<Expr> terms;
    for (std::size_t k = 0; k < n; ++k) terms.push_back(eta[k] * frame[a][k]);
    eta_star[a] = sym::sum(terms);
  }
  out.psi = TensorField::from_matrix(params, 1, 1, psi);
  out.xi_star = TensorField::vector(params, xi_star);
  out.eta_star = TensorField::one_form(params, eta_star);

  StructureReport& r = out.report;
  r.title = "induced invariant structure";
  {
    std::vector<ExprPair> pairs;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Expr> terms;
        for (std::size_t b = 0; b < m; ++b) terms.push_back(psi[b][a] * frame[b][k]);
        pairs.push_back({images[a][k], sym::sum(terms), "phi(" + u(a) + ")^" + i.ambient().coords()[k]});
      }
    }
    r.entries.push_back(geo::check_identity("5.10", "phi i_* X = i_* psi X", pairs, params, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Expr> terms;
      for (std::size_t a = 0; a < m; ++a) terms.push_back(xi_star[a] * frame[a][k]);
      pairs.push_back({sym::sum(terms), xi[k], "i_* xi*^" + i.ambient().coords()[k]});
    }
    r.entries.push_back(geo::check_identity("5.11", "i_* xi* = xi", pairs, params, cfg));
  }

  const contact::AcStructure induced = out.ac();
  static const std::map<std::string, std::string> relabel = {
      {"2.1", "5.17"}, {"2.2", "5.14"}, {"2.3", "5.15"}, {"2.4", "5.16"}, {"2.5", "rank-psi"}};
  for (auto e : contact::verify_ac(induced, cfg).entries) {
    if (auto it = relabel.find(e.id); it != relabel.end()) e.id = it->second;
    r.entries.push_back(std::move(e));
  }

  if (contact::normality_entry(s, cfg).holds) {
    r.entries.push_back(contact::normality_entry(induced, cfg, "5.8"));
  } else {
    r.notes.push_back("ambient structure is not normal; normality transfer not checked");
  }

  if (g != nullptr) {
    out.g_star = induced_metric(i, *g, cfg);
    try {
      const contact::LapStructure lap(induced, MetricField(*out.g_star, cfg));
      for (auto e : contact::verify_lap(lap, cfg).entries) {
        if (e.id == "pre:ac") continue;
        e.id = "lap:" + e.id;
        r.entries.push_back(std::move(e));
      }
    } catch (const geo::GeometryError& err) {
      CheckEntry e;
      e.id = "lap:metric";
      e.identity = "induced metric is nondegenerate";
      e.note = err.what();
      r.entries.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace lps::hyp
