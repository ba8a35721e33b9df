#include "lps/contact/verify.hpp"

#include "lps/contact/normality.hpp"
#include "lps/geometry/operators.hpp"

#include <cmath>

namespace lps::contact {

namespace {

using geo::CheckEntry;
using geo::ExprPair;

std::string d(const Chart& c, std::size_t i) { return "d_" + c.coords()[i]; }

void add_vector_pairs(std::vector<ExprPair>& pairs, const TensorField& lhs, const TensorField& rhs,
                      const std::string& label) {
  for (std::size_t k = 0; k < lhs.dim(); ++k) {
    pairs.push_back({lhs.at(k), rhs.at(k), label + "^" + lhs.chart().coords()[k]});
  }
}

CheckEntry precondition(std::string id, std::string what, const StructureReport& r) {
  CheckEntry e;
  e.id = std::move(id);
  e.identity = std::move(what);
  e.holds = r.passed();
  e.symbolic = false;
  if (!e.holds) {
    std::string failing;
    for (const auto& x : r.entries) {
      if (x.ok()) continue;
      if (!failing.empty()) failing += ", ";
      failing += x.id;
    }
    e.note = "violated: " + failing;
  }
  return e;
}

TensorField column(const TensorField& phi, std::size_t j) {
  std::vector<Expr> c(phi.dim());
  for (std::size_t i = 0; i < phi.dim(); ++i) c[i] = phi.at(i, j);
  return TensorField::vector(phi.chart(), std::move(c));
}

}  // namespace

StructureReport verify_ac(const AcStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "almost contact axioms";
  const Chart& chart = s.chart();
  const std::size_t n = s.dim();
  const TensorField& phi = s.phi();
  const TensorField& xi = s.xi();
  const TensorField& eta = s.eta();

  {
    std::vector<ExprPair> pairs;
    add_vector_pairs(pairs, geo::apply(phi, xi), TensorField::zero(chart, 1, 0), "phi(xi)");
    r.entries.push_back(geo::check_identity("2.1", "phi xi = 0", pairs, chart, cfg));
  }
  {
    const TensorField lhs = geo::compose(phi, phi);
    const TensorField rhs = Expr(s.e1()) * TensorField::identity(chart) +
                            Expr(s.e2()) * geo::tensor_product(xi, eta);
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        pairs.push_back({lhs.at(i, j), rhs.at(i, j), "phi^2(" + d(chart, j) + ")^" + chart.coords()[i]});
      }
    }
    r.entries.push_back(geo::check_identity("2.2", "phi^2 = e1 I + e2 eta (x) xi", pairs, chart, cfg));
  }
  {
    const TensorField lhs = geo::pullback(eta, phi);
    std::vector<ExprPair> pairs;
    for (std::size_t j = 0; j < n; ++j) pairs.push_back({lhs.at(j), Expr(0), "eta(phi " + d(chart, j) + ")"});
    r.entries.push_back(geo::check_identity("2.3", "eta o phi = 0", pairs, chart, cfg));
  }
  r.entries.push_back(geo::check_identity(
      "2.4", "eta(xi) = -e1 e2", {{geo::contract(eta, xi), Expr(-s.e1() * s.e2()), "eta(xi)"}}, chart,
      cfg));
  {
    CheckEntry e;
    e.id = "2.5";
    e.identity = "rank phi = n - 1";
    e.holds = true;
    try {
      for (const auto& p : geo::sample_points(chart, cfg, phi.components())) {
        const int rank = geo::numerical_rank(phi, p, cfg.tol);
        const double gap = std::abs(rank - static_cast<double>(n - 1));
        e.max_residual = std::max(e.max_residual, gap);
        if (gap != 0.0 && e.holds) {
          e.holds = false;
          e.witness = "rank " + std::to_string(rank) + " at " + p.str();
        }
      }
    } catch (const sym::EvalError& err) {
      e.holds = false;
      e.note = std::string("sampling failed: ") + err.what();
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

StructureReport verify_lap(const LapStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "Lorentzian almost paracontact axioms";
  const AcStructure& ac = s.ac();
  const Chart& chart = s.chart();
  const std::size_t n = ac.dim();
  const MetricField& g = s.metric();
  const TensorField& gt = g.tensor();
  const TensorField& phi = ac.phi();
  const TensorField& eta = ac.eta();
  const TensorField& xi = ac.xi();
  const TensorField& fundamental = s.fundamental_form();

  r.entries.push_back(precondition("pre:ac", "almost contact axioms", verify_ac(ac, cfg)));

  {
    const TensorField xi_flat = geo::lower(gt, xi);
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.push_back({eta.at(i), xi_flat.at(i), "eta(" + d(chart, i) + ")"});
    r.entries.push_back(geo::check_identity("2.6", "eta(X) = g(X, xi)", pairs, chart, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const TensorField pi = column(phi, i);
      for (std::size_t j = i; j < n; ++j) {
        const Expr lhs = geo::evaluate(gt, pi, column(phi, j));
        const Expr rhs = g.at(i, j) + eta.at(i) * eta.at(j);
        pairs.push_back({lhs, rhs, "(" + d(chart, i) + "," + d(chart, j) + ")"});
      }
    }
    r.entries.push_back(geo::check_identity("2.7", "g(phi X, phi Y) = g(X, Y) + eta(X) eta(Y)", pairs,
                                            chart, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        pairs.push_back({fundamental.at(i, j), fundamental.at(j, i), "Phi(" + d(chart, i) + "," + d(chart, j) + ")"});
      }
    }
    r.entries.push_back(geo::check_identity("2.8", "Phi(X, Y) = Phi(Y, X)", pairs, chart, cfg));
  }
  r.entries.push_back(geo::check_identity("xi-unit", "g(xi, xi) = -1",
                                          {{geo::evaluate(gt, xi, xi), Expr(-1), "g(xi,xi)"}}, chart, cfg));
  {
    CheckEntry e;
    e.id = "lorentzian";
    e.identity = "g has Lorentzian signature";
    e.holds = g.signature() == geo::Signature::Lorentzian;
    e.note = std::string("signature: ") + std::string(geo::signature_name(g.signature()));
    r.entries.push_back(std::move(e));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const TensorField x = geo::basis_vector(chart, i);
      const TensorField d_fund = geo::covariant_derivative(s.connection(), fundamental, x);
      const TensorField d_phi = geo::covariant_derivative(s.connection(), phi, x);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Expr> terms;
          for (std::size_t l = 0; l < n; ++l) terms.push_back(g.at(j, l) * d_phi.at(l, k));
          pairs.push_back({d_fund.at(j, k), sym::sum(terms),
                           "(" + d(chart, i) + ";" + d(chart, j) + "," + d(chart, k) + ")"});
        }
      }
    }
    r.entries.push_back(geo::check_identity("2.9", "(nabla_X Phi)(Y, Z) = g(Y, (nabla_X phi) Z)", pairs,
                                            chart, cfg));
  }
  return r;
}

StructureReport verify_lp_contact(const LapStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "Lorentzian paracontact condition";
  const Chart& chart = s.chart();
  const std::size_t n = chart.dim();
  r.entries.push_back(precondition("pre:lap", "Lorentzian almost paracontact axioms", verify_lap(s, cfg)));

  std::vector<TensorField> d_eta;
  for (std::size_t i = 0; i < n; ++i) {
    d_eta.push_back(geo::covariant_derivative(s.connection(), s.ac().eta(), geo::basis_vector(chart, i)));
  }
  const Expr half(sym::Rational(1, 2));
  std::vector<ExprPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      pairs.push_back({s.fundamental_form().at(i, j), half * (d_eta[i].at(j) + d_eta[j].at(i)),
                       "Phi(" + d(chart, i) + "," + d(chart, j) + ")"});
    }
  }
  r.entries.push_back(geo::check_identity(
      "2.10", "Phi(X, Y) = ((nabla_X eta) Y + (nabla_Y eta) X) / 2", pairs, chart, cfg));
  return r;
}

StructureReport verify_lp_sasakian(const LapStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "Lorentzian para-Sasakian condition";
  const AcStructure& ac = s.ac();
  const Chart& chart = s.chart();
  const std::size_t n = chart.dim();
  const TensorField& eta = ac.eta();
  const TensorField& xi = ac.xi();
  r.entries.push_back(precondition("pre:lap", "Lorentzian almost paracontact axioms", verify_lap(s, cfg)));

  {
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const TensorField d_phi = geo::covariant_derivative(s.connection(), ac.phi(), geo::basis_vector(chart, i));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Expr rhs = (s.metric().at(i, j) + Expr(2) * eta.at(i) * eta.at(j)) * xi.at(k);
          if (k == i) rhs = rhs + eta.at(j);
          pairs.push_back({d_phi.at(k, j), rhs,
                           "(nabla_" + d(chart, i) + " phi)(" + d(chart, j) + ")^" + chart.coords()[k]});
        }
      }
    }
    r.entries.push_back(geo::check_identity(
        "2.11", "(nabla_X phi) Y = eta(Y) X + g(X, Y) xi + 2 eta(X) eta(Y) xi", pairs, chart, cfg));
  }
  {
    const TensorField de = geo::exterior_derivative_1form(eta);
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        pairs.push_back({de.at(i, j), Expr(0), "d eta(" + d(chart, i) + "," + d(chart, j) + ")"});
      }
    }
    r.entries.push_back(geo::check_identity("d-eta", "d eta = 0", pairs, chart, cfg));
  }
  {
    std::vector<ExprPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      add_vector_pairs(pairs, geo::covariant_derivative(s.connection(), xi, geo::basis_vector(chart, i)),
                       column(ac.phi(), i), "nabla_" + d(chart, i) + " xi");
    }
    r.entries.push_back(geo::check_identity("nabla-xi", "nabla_X xi = phi X", pairs, chart, cfg));
  }
  return r;
}

StructureReport verify_affinely_cosymplectic(const AcStructure& s, const Connection& nabla,
                                             const CheckConfig& cfg) {
  StructureReport r;
  r.title = "affinely cosymplectic condition";
  const Chart& chart = s.chart();
  const std::size_t n = chart.dim();
  if (!nabla.torsion_free()) {
    CheckEntry e;
    e.id = "pre:torsion-free";
    e.identity = "connection is torsion-free";
    e.holds = false;
    r.entries.push_back(std::move(e));
  }

  std::vector<ExprPair> phi_pairs;
  std::vector<ExprPair> eta_pairs;
  std::vector<ExprPair> xi_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const TensorField x = geo::basis_vector(chart, i);
    const TensorField d_phi = geo::covariant_derivative(nabla, s.phi(), x);
    const TensorField d_eta = geo::covariant_derivative(nabla, s.eta(), x);
    const TensorField d_xi = geo::covariant_derivative(nabla, s.xi(), x);
    for (std::size_t k = 0; k < n; ++k) {
      eta_pairs.push_back({d_eta.at(k), Expr(0), "(nabla_" + d(chart, i) + " eta)_" + chart.coords()[k]});
      xi_pairs.push_back({d_xi.at(k), Expr(0), "(nabla_" + d(chart, i) + " xi)^" + chart.coords()[k]});
      for (std::size_t j = 0; j < n; ++j) {
        phi_pairs.push_back({d_phi.at(k, j), Expr(0),
                             "(nabla_" + d(chart, i) + " phi)^" + chart.coords()[k] + "_" + chart.coords()[j]});
      }
    }
  }
  r.entries.push_back(geo::check_identity("affine-phi", "nabla phi = 0", phi_pairs, chart, cfg));
  r.entries.push_back(geo::check_identity("affine-eta", "nabla eta = 0", eta_pairs, chart, cfg));
  if (r.entries[r.entries.size() - 2].holds && r.entries.back().holds) {
    r.entries.push_back(geo::check_identity("affine-xi", "nabla xi = 0", xi_pairs, chart, cfg));
    r.entries.push_back(normality_entry(s, cfg, "affine-normal"));
  } else {
    r.notes.push_back("not affinely cosymplectic; nabla xi = 0 and normality not asserted");
  }
  return r;
}

StructureReport xi_automorphism_check(const AcStructure& s, const CheckConfig& cfg) {
  StructureReport r;
  r.title = "infinitesimal automorphism";
  const Chart& chart = s.chart();
  const std::size_t n = chart.dim();
  const TensorField l_phi = geo::lie_derivative(s.xi(), s.phi());
  const TensorField l_eta = geo::lie_derivative(s.xi(), s.eta());
  std::vector<ExprPair> phi_pairs;
  std::vector<ExprPair> eta_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    eta_pairs.push_back({l_eta.at(i), Expr(0), "(L_xi eta)_" + chart.coords()[i]});
    for (std::size_t j = 0; j < n; ++j) {
      phi_pairs.push_back({l_phi.at(i, j), Expr(0), "(L_xi phi)^" + chart.coords()[i] + "_" + chart.coords()[j]});
    }
  }
  r.entries.push_back(
      geo::check_identity("lie-xi-phi", "L_xi phi = 0", phi_pairs, chart, cfg, geo::EntryKind::Finding));
  r.entries.push_back(
      geo::check_identity("lie-xi-eta", "L_xi eta = 0", eta_pairs, chart, cfg, geo::EntryKind::Finding));
  return r;
}

}  // namespace lps::contact
