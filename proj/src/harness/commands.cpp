#include "lps/harness/commands.hpp"

#include "lps/contact/normality.hpp"
#include "lps/contact/verify.hpp"
#include "lps/geometry/operators.hpp"

#include <filesystem>
#include <future>
#include <sstream>

namespace lps::harness {

namespace {

using geo::CheckEntry;
using geo::EntryKind;
using geo::ExprPair;
using geo::StructureReport;
using geo::TensorField;
using hyp::AlongField;

std::string vec_str(const std::vector<geo::Expr>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + "]";
}

std::string tensor_str(const TensorField& t) {
  if (t.rank() == 1) return vec_str(t.components());
  std::string out = "[";
  const auto m = t.matrix();
  for (std::size_t k = 0; k < m.size(); ++k) out += (k ? ", " : "") + vec_str(m[k]);
  return out + "]";
}

std::string connection_str(const geo::Connection& c) {
  const auto& coords = c.chart().coords();
  std::string out;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    for (std::size_t i = 0; i < c.dim(); ++i) {
      for (std::size_t j = 0; j < c.dim(); ++j) {
        const auto& g = c.gamma(k, i, j);
        if (g.is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += "G^" + coords[k] + "_" + coords[i] + coords[j] + " = " + g.str();
      }
    }
  }
  return out.empty() ? "0" : out;
}

bool has_suite(const RunConfig& run, const std::string& s) {
  return std::find(run.suites.begin(), run.suites.end(), s) != run.suites.end();
}

std::optional<bool> expected_for(const StructureDef& s, const std::string& suite) {
  const auto it = s.expected.find(suite);
  if (it == s.expected.end()) return std::nullopt;
  return it->second;
}

StructureReport normality_report(const contact::AcStructure& ac, const geo::Connection& nabla,
                                 const geo::CheckConfig& cfg) {
  StructureReport r;
  r.title = "normality";
  r.entries.push_back(contact::normality_entry(ac, cfg));
  if (nabla.torsion_free()) {
    const TensorField a = contact::normality_tensor(ac);
    const TensorField b = contact::normality_tensor(ac, nabla);
    std::vector<ExprPair> pairs;
    for (std::size_t k = 0; k < a.components().size(); ++k) pairs.push_back({a[k], b[k], "S#" + std::to_string(k)});
    r.entries.push_back(
        geo::check_identity("2.13-connection", "bracket and connection forms of S agree", pairs, ac.chart(), cfg));
  }
  return r;
}

std::optional<contact::LapStructure> lap_of(const StructureDef& s) {
  if (!s.metric || s.ac.e1() != 1 || s.ac.e2() != 1) return std::nullopt;
  return contact::LapStructure(s.ac, *s.metric);
}

struct Computed {
  std::vector<AlongField> frame;
  std::vector<AlongField> phi_u;
  AlongField xi;
  std::optional<hyp::Decomposition> dec;
  std::optional<hyp::GaussWeingarten> gw;
  std::optional<TensorField> psi, xi_star, eta_star;
  std::optional<AlongField> normal;
  std::optional<TensorField> G;
};

CheckEntry highlight_entry(const Highlight& h, const Computed& c, const hyp::Immersion& imm,
                           const geo::CheckConfig& cfg) {
  CheckEntry missing;
  missing.id = "expect:" + h.id;
  missing.identity = h.quantity + " matches the reference value";
  missing.kind = EntryKind::Discrepancy;
  missing.expected_discrepancy = h.expected_discrepancy;

  std::vector<geo::Expr> actual;
  std::size_t rows = 0;
  auto take_tensor = [&](const std::optional<TensorField>& t) {
    if (!t) return false;
    actual = t->components();
    rows = t->rank() == 2 ? t->dim() : 0;
    return true;
  };
  auto take_along = [&](const std::optional<AlongField>& v) {
    if (!v) return false;
    actual = *v;
    return true;
  };
  bool ok = false;
  const auto idx = static_cast<std::size_t>(h.index);
  if (h.quantity == "J") ok = take_tensor(c.dec ? std::optional(c.dec->J) : std::nullopt);
  else if (h.quantity == "alpha") ok = take_tensor(c.dec ? std::optional(c.dec->alpha) : std::nullopt);
  else if (h.quantity == "A") ok = take_tensor(c.gw ? std::optional(c.gw->A) : std::nullopt);
  else if (h.quantity == "w") ok = take_tensor(c.gw ? std::optional(c.gw->w) : std::nullopt);
  else if (h.quantity == "h") ok = take_tensor(c.gw ? std::optional(c.gw->h) : std::nullopt);
  else if (h.quantity == "G") ok = take_tensor(c.G);
  else if (h.quantity == "psi") ok = take_tensor(c.psi);
  else if (h.quantity == "xi*") ok = take_tensor(c.xi_star);
  else if (h.quantity == "eta*") ok = take_tensor(c.eta_star);
  else if (h.quantity == "u") ok = idx < c.frame.size() && take_along(c.frame[idx]);
  else if (h.quantity == "phi-u") ok = idx < c.phi_u.size() && take_along(c.phi_u[idx]);
  else if (h.quantity == "xi") ok = take_along(c.xi);
  else if (h.quantity == "metric-normal") ok = take_along(c.normal);
  if (!ok) {
    missing.note = "quantity '" + h.quantity + "' is not available for this hypersurface";
    return missing;
  }

  std::vector<geo::Expr> expected;
  for (const auto& v : h.value) {
    if (v.is_array()) {
      for (const auto& x : v) expected.push_back(sym::parse_expr(x.is_string() ? x.get<std::string>() : x.dump()));
    } else {
      expected.push_back(sym::parse_expr(v.is_string() ? v.get<std::string>() : v.dump()));
    }
  }
  if (expected.size() != actual.size() || (rows == 0 && h.value.size() != actual.size() && !h.value[0].is_array())) {
    missing.note = "reference value has " + std::to_string(expected.size()) + " components, computed " +
                   std::to_string(actual.size());
    return missing;
  }

  std::vector<ExprPair> pairs;
  if (h.proportional) {
    for (std::size_t i = 0; i < actual.size(); ++i) {
      for (std::size_t j = i + 1; j < actual.size(); ++j) {
        pairs.push_back({actual[i] * expected[j], actual[j] * expected[i],
                         "cross(" + std::to_string(i) + "," + std::to_string(j) + ")"});
      }
    }
  } else {
    for (std::size_t k = 0; k < actual.size(); ++k) {
      pairs.push_back({actual[k], expected[k], h.quantity + "#" + std::to_string(k)});
    }
  }
  CheckEntry e = geo::check_identity("expect:" + h.id,
                                     h.quantity + (h.proportional ? " proportional to" : " equals") + " the reference value",
                                     pairs, imm.params(), cfg, EntryKind::Discrepancy);
  e.expected_discrepancy = h.expected_discrepancy;
  e.note = h.note;
  return e;
}

}  // namespace

geo::CheckConfig effective_config(const RunConfig& run, const Overrides& o) {
  geo::CheckConfig c = run.check;
  if (o.seed) c.seed = *o.seed;
  if (o.points) c.points = *o.points;
  if (o.tol) c.tol = *o.tol;
  return c;
}

LoadedConfig resolve_structure(const std::string& target) {
  if (registry_document(target) != nullptr) return load_example(target);
  if (!std::filesystem::exists(target)) throw ConfigError("unknown example or missing file '" + target + "'");
  return load_config(target);
}

HypersurfaceTarget resolve_hypersurfaces(const std::string& target) {
  if (const ExampleSpec* e = find_example(target, true)) {
    HypersurfaceTarget t{load_example(e->structure), {}, {}};
    for (std::size_t k = 0; k < t.config.structure.hypersurfaces.size(); ++k) {
      if (t.config.structure.hypersurfaces[k].name == *e->hypersurface) {
        t.indices.push_back(k);
        t.labels.push_back(e->id);
      }
    }
    return t;
  }
  if (registry_document(target) != nullptr) {
    HypersurfaceTarget t{load_example(target), {}, {}};
    for (std::size_t k = 0; k < t.config.structure.hypersurfaces.size(); ++k) {
      const std::string& name = t.config.structure.hypersurfaces[k].name;
      const ExampleSpec* spec = nullptr;
      for (const auto& e : examples()) {
        if (e.structure == target && e.hypersurface == name) spec = &e;
      }
      t.indices.push_back(k);
      t.labels.push_back(spec ? spec->id : target + "/" + name);
    }
    return t;
  }
  if (!std::filesystem::exists(target)) throw ConfigError("unknown example or missing file '" + target + "'");
  HypersurfaceTarget t{load_config(target), {}, {}};
  for (std::size_t k = 0; k < t.config.structure.hypersurfaces.size(); ++k) {
    t.indices.push_back(k);
    t.labels.push_back(t.config.structure.name + "/" + t.config.structure.hypersurfaces[k].name);
  }
  if (t.indices.empty()) throw ConfigError("config defines no hypersurfaces", "/hypersurfaces");
  return t;
}

Subject check_structure(const LoadedConfig& config, const geo::CheckConfig& cfg, const std::string& id) {
  const StructureDef& s = config.structure;
  const RunConfig& run = config.run;
  Subject out;
  out.id = id;
  out.kind = "structure";
  out.values.emplace_back("dimension", std::to_string(s.ac.dim()));
  out.values.emplace_back("connection", s.connection_kind);
  if (s.metric) out.values.emplace_back("signature", std::string(geo::signature_name(s.metric->signature())));
  if (!s.description.empty()) out.notes.push_back(s.description);

  auto add = [&](const std::string& name, StructureReport r) {
    out.sections.push_back(Section{name, std::move(r), expected_for(s, name)});
  };
  try {
    if (wants_suite(run, "ac")) add("ac", contact::verify_ac(s.ac, cfg));
    const auto lap = lap_of(s);
    if (lap) {
      out.values.emplace_back("Levi-Civita", connection_str(lap->connection()));
      if (wants_suite(run, "lap")) add("lap", contact::verify_lap(*lap, cfg));
      if (wants_suite(run, "lp-contact")) add("lp-contact", contact::verify_lp_contact(*lap, cfg));
      if (wants_suite(run, "lp-sasakian")) add("lp-sasakian", contact::verify_lp_sasakian(*lap, cfg));
    } else if (s.metric) {
      out.notes.push_back("metric given with (e1, e2) != (1, 1); Lorentzian suites not applicable");
    }
    if (wants_suite(run, "normality")) add("normality", normality_report(s.ac, s.connection, cfg));
    const bool affine = has_suite(run, "affine-cosymplectic") || s.expected.count("affine-cosymplectic") != 0 ||
                        (run.suites.empty() && s.connection_kind != "levi-civita");
    if (affine) add("affine-cosymplectic", contact::verify_affinely_cosymplectic(s.ac, s.connection, cfg));
    if (wants_suite(run, "automorphism")) add("automorphism", contact::xi_automorphism_check(s.ac, cfg));
  } catch (const std::exception& err) {
    out.errors.push_back(err.what());
  }
  return out;
}

Subject analyze_hypersurface(const LoadedConfig& config, std::size_t index, const geo::CheckConfig& cfg,
                             const std::string& id) {
  const StructureDef& s = config.structure;
  const RunConfig& run = config.run;
  const HypersurfaceDef& h = s.hypersurfaces.at(index);
  const hyp::Immersion& imm = h.immersion;
  const geo::MetricField* metric = s.metric ? &*s.metric : nullptr;

  Subject out;
  out.id = id;
  out.kind = "hypersurface";
  out.values.emplace_back("params", vec_str([&] {
                            std::vector<geo::Expr> p;
                            for (const auto& c : imm.params().coords()) p.push_back(geo::Expr::symbol(c));
                            return p;
                          }()));
  out.values.emplace_back("map", vec_str(imm.map()));

  Computed c;
  try {
    c.frame = hyp::tangent_frame(imm, cfg);
    for (std::size_t a = 0; a < c.frame.size(); ++a) out.values.emplace_back("u" + std::to_string(a + 1), vec_str(c.frame[a]));
    c.xi = imm.pull(s.ac.xi());
    const geo::Matrix phi = imm.pull_matrix(s.ac.phi());
    for (const auto& u : c.frame) {
      AlongField v(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) {
        std::vector<geo::Expr> terms;
        for (std::size_t j = 0; j < u.size(); ++j) terms.push_back(phi[k][j] * u[j]);
        v[k] = sym::sum(terms);
      }
      c.phi_u.push_back(std::move(v));
    }

    const hyp::Classification cls = hyp::classify_invariance(imm, s.ac, cfg);
    const bool xi_transversal = cls.xi.position == hyp::XiPosition::Transversal;
    out.values.emplace_back("xi-position", std::string(hyp::xi_position_name(cls.xi.position)));
    out.values.emplace_back("classification", std::string(hyp::invariance_tag_name(cls.tag)));
    if (wants_suite(run, "classification")) {
      StructureReport r;
      r.title = "classification";
      r.notes = cls.evidence;
      if (h.expected_classification) {
        CheckEntry e;
        e.id = "expect:classification";
        e.identity = "classification is " + *h.expected_classification;
        e.holds = hyp::invariance_tag_name(cls.tag) == *h.expected_classification;
        e.symbolic = false;
        if (!e.holds) e.witness = "computed " + std::string(hyp::invariance_tag_name(cls.tag));
        r.entries.push_back(std::move(e));
      }
      out.sections.push_back(Section{"classification", std::move(r), std::nullopt});
    }

    if (metric) {
      try {
        c.normal = hyp::metric_normal(imm, *metric, cfg);
        out.values.emplace_back("N", vec_str(*c.normal));
      } catch (const hyp::HypersurfaceError& err) {
        out.notes.push_back(std::string("metric normal unavailable: ") + err.what());
      }
    }

    std::optional<hyp::TransversalChoice> choice;
    if (h.transversal_given) choice = h.transversal;
    else if (xi_transversal) choice = hyp::TransversalChoice::characteristic();
    else if (metric) choice = hyp::TransversalChoice::metric_normal();
    if (choice && choice->kind == hyp::TransversalKind::Characteristic && !xi_transversal) {
      out.notes.push_back("xi is not transversal; the characteristic transversal is unavailable");
      choice = metric ? std::optional(hyp::TransversalChoice::metric_normal()) : std::nullopt;
    }
    std::optional<AlongField> t;
    if (choice) {
      t = hyp::resolve_transversal(imm, s.ac, *choice, metric, cfg);
      out.values.emplace_back("transversal", std::string(hyp::transversal_name(choice->kind)) + " " + vec_str(*t));
    } else {
      out.notes.push_back("no transversal available; decomposition and Gauss data skipped");
    }
    const bool t_is_xi = choice && choice->kind == hyp::TransversalKind::Characteristic;

    if (t) {
      c.dec = hyp::phi_decompose(imm, s.ac, *t, cfg);
      out.values.emplace_back("J", tensor_str(c.dec->J));
      out.values.emplace_back("alpha", tensor_str(c.dec->alpha));
      if (wants_suite(run, "decomposition")) {
        StructureReport r;
        r.title = "phi decomposition";
        r.entries.push_back(c.dec->reconstruction);
        if (t_is_xi) {
          const TensorField& J = c.dec->J;
          std::vector<ExprPair> pairs;
          const TensorField sq = geo::compose(J, J);
          const TensorField id_ = TensorField::identity(imm.params());
          for (std::size_t k = 0; k < sq.components().size(); ++k) pairs.push_back({sq[k], id_[k], "J^2#" + std::to_string(k)});
          r.entries.push_back(geo::check_identity("3.1", "J^2 = I", pairs, imm.params(), cfg));
          const TensorField ca = hyp::c_operator(c.dec->alpha, J);
          const TensorField cca = hyp::c_operator(ca, J);
          std::vector<ExprPair> inv;
          for (std::size_t k = 0; k < cca.dim(); ++k) inv.push_back({cca[k], c.dec->alpha[k], "C^2 alpha#" + std::to_string(k)});
          r.entries.push_back(geo::check_identity("C-involution", "(C o C) alpha = alpha", inv, imm.params(), cfg));
        }
        out.sections.push_back(Section{"decomposition", std::move(r), std::nullopt});
      }
    }
    if (cls.tag == hyp::InvarianceTag::InvariantTransversalXi && c.dec) c.psi = c.dec->J;
    if (cls.tag == hyp::InvarianceTag::InvariantTangentXi) {
      hyp::InvariantStructure inv = hyp::induced_invariant_structure(imm, s.ac, metric, cfg);
      c.psi = inv.psi;
      c.xi_star = inv.xi_star;
      c.eta_star = inv.eta_star;
      out.values.emplace_back("psi", tensor_str(inv.psi));
      out.values.emplace_back("xi*", tensor_str(inv.xi_star));
      out.values.emplace_back("eta*", tensor_str(inv.eta_star));
      if (inv.g_star) out.values.emplace_back("g*", tensor_str(*inv.g_star));
      if (wants_suite(run, "decomposition")) {
        out.sections.push_back(Section{"invariant-structure", std::move(inv.report), std::nullopt});
      }
    }

    if (t) {
      c.gw = hyp::gauss_weingarten(imm, s.connection, *t, cfg);
      out.values.emplace_back("induced connection", connection_str(c.gw->induced));
      out.values.emplace_back("h", tensor_str(c.gw->h));
      out.values.emplace_back("A", tensor_str(c.gw->A));
      out.values.emplace_back("w", tensor_str(c.gw->w));
      if (wants_suite(run, "gauss-weingarten")) {
        StructureReport r;
        r.title = "Gauss-Weingarten data";
        if (s.connection.torsion_free()) {
          r.entries.push_back(hyp::h_symmetry_entry(*c.gw, cfg));
        } else {
          r.notes.push_back("ambient connection has torsion; h need not be symmetric");
        }
        out.sections.push_back(Section{"gauss-weingarten", std::move(r), std::nullopt});
      }
    }

    const auto lap = lap_of(s);
    const bool lps = lap && contact::verify_lp_sasakian(*lap, cfg).passed();
    if (lap && cls.tag == hyp::InvarianceTag::NoninvariantTransversalXi) {
      const hyp::Decomposition d = t_is_xi ? *c.dec : hyp::phi_decompose(imm, s.ac, c.xi, cfg);
      hyp::ProductMetric pm = hyp::almost_product_metric(imm, *lap, d, cfg);
      c.G = pm.G;
      out.values.emplace_back("G", tensor_str(pm.G));
      if (wants_suite(run, "product-metric")) out.sections.push_back(Section{"product-metric", std::move(pm.report), std::nullopt});
      if (wants_suite(run, "noninvariant-lps")) {
        if (lps) {
          out.sections.push_back(Section{"noninvariant-lps", hyp::verify_noninvariant_lps(imm, *lap, cfg), std::nullopt});
        } else {
          out.notes.push_back("ambient is not LP-Sasakian; noninvariant LP-Sasakian theorems not applicable");
        }
      }
    }
    if (lap && cls.tag == hyp::InvarianceTag::InvariantTangentXi && wants_suite(run, "invariant-lps")) {
      if (lps) {
        out.sections.push_back(Section{"invariant-lps", hyp::verify_invariant_lps(imm, *lap, cfg), std::nullopt});
      } else {
        out.notes.push_back("ambient is not LP-Sasakian; invariant LP-Sasakian theorems not applicable");
      }
    }
    if (choice && wants_suite(run, "affine-case")) {
      if (s.connection.torsion_free()) {
        out.sections.push_back(
            Section{"affine-case", hyp::verify_affine_case(imm, s.ac, s.connection, *choice, metric, cfg, h.affine),
                    std::nullopt});
      } else {
        out.notes.push_back("ambient connection has torsion; affine cases not applicable");
      }
    }

    if (!h.highlights.empty() && wants_suite(run, "expectations")) {
      StructureReport r;
      r.title = "reference values";
      for (const auto& hl : h.highlights) r.entries.push_back(highlight_entry(hl, c, imm, cfg));
      out.sections.push_back(Section{"expectations", std::move(r), std::nullopt});
    }
  } catch (const geo::GeometryError& err) {
    out.errors.push_back(err.what());
  } catch (const sym::EvalError& err) {
    out.errors.push_back(err.what());
  }
  return out;
}

Report cmd_check_structure(const std::string& target, const Overrides& o) {
  const LoadedConfig config = resolve_structure(target);
  Report r{"check-structure", target, effective_config(config.run, o), {}};
  r.subjects.push_back(check_structure(config, r.config, registry_document(target) ? target : config.structure.name));
  return r;
}

Report cmd_analyze(const std::string& target, const Overrides& o) {
  const HypersurfaceTarget t = resolve_hypersurfaces(target);
  if (t.indices.empty()) throw ConfigError("no hypersurface matches '" + target + "'");
  Report r{"analyze", target, effective_config(t.config.run, o), {}};
  for (std::size_t k = 0; k < t.indices.size(); ++k) {
    r.subjects.push_back(analyze_hypersurface(t.config, t.indices[k], r.config, t.labels[k]));
  }
  return r;
}

Report cmd_verify_theorems(const std::optional<std::string>& target, const Overrides& o) {
  struct Job {
    std::shared_ptr<const LoadedConfig> config;
    std::optional<std::size_t> hypersurface;
    std::string label;
  };
  std::vector<Job> jobs;
  auto add_structure = [&](std::shared_ptr<const LoadedConfig> cfg, const std::string& label,
                           const std::function<std::string(const std::string&)>& hlabel) {
    jobs.push_back({cfg, std::nullopt, label});
    for (std::size_t k = 0; k < cfg->structure.hypersurfaces.size(); ++k) {
      jobs.push_back({cfg, k, hlabel(cfg->structure.hypersurfaces[k].name)});
    }
  };
  auto registry_label = [](const std::string& sid) {
    return [sid](const std::string& name) {
      for (const auto& e : examples()) {
        if (e.structure == sid && e.hypersurface == name) return e.id;
      }
      return sid + "/" + name;
    };
  };

  RunConfig base;
  if (!target) {
    for (const auto& sid : structure_ids()) {
      add_structure(std::make_shared<const LoadedConfig>(load_example(sid)), sid, registry_label(sid));
    }
  } else if (registry_document(*target) != nullptr) {
    add_structure(std::make_shared<const LoadedConfig>(load_example(*target)), *target, registry_label(*target));
  } else {
    auto cfg = std::make_shared<const LoadedConfig>(resolve_structure(*target));
    base = cfg->run;
    const std::string name = cfg->structure.name;
    add_structure(cfg, name, [name](const std::string& h) { return name + "/" + h; });
  }

  Report r{"verify-theorems", target.value_or("registry"), effective_config(base, o), {}};
  std::vector<std::future<Subject>> futures;
  for (const auto& job : jobs) {
    const geo::CheckConfig cfg = effective_config(job.config->run, o);
    futures.push_back(std::async(std::launch::async, [job, cfg] {
      return job.hypersurface ? analyze_hypersurface(*job.config, *job.hypersurface, cfg, job.label)
                              : check_structure(*job.config, cfg, job.label);
    }));
  }
  for (auto& f : futures) r.subjects.push_back(f.get());
  return r;
}

std::string list_examples(Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& e : examples()) {
      arr.push_back({{"id", e.id},
                     {"kind", e.hypersurface ? "hypersurface" : "structure"},
                     {"structure", e.structure},
                     {"description", e.description}});
    }
    return json{{"schema", kReportSchema}, {"examples", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& e : examples()) {
    os << std::left << std::setw(8) << e.id << ' ' << std::setw(13) << (e.hypersurface ? "hypersurface" : "structure")
       << ' ' << e.description << "\n";
  }
  return os.str();
}

json export_example(const std::string& id) {
  if (registry_document(id) != nullptr) return export_config(load_example(id));
  const ExampleSpec* e = find_example(id, true);
  if (e == nullptr) throw ConfigError("unknown example '" + id + "'");
  LoadedConfig config = load_example(e->structure);
  auto& hs = config.structure.hypersurfaces;
  hs.erase(std::remove_if(hs.begin(), hs.end(), [&](const HypersurfaceDef& h) { return h.name != *e->hypersurface; }),
           hs.end());
  return export_config(config);
}

}  // namespace lps::harness
