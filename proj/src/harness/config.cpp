#include "lps/harness/config.hpp"

#include "lps/geometry/operators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace lps::harness {

namespace {

using geo::Expr;
using geo::Matrix;

std::string describe(const std::string& message, const std::string& where, std::size_t line) {
  std::string out = message;
  if (!where.empty()) out += " at " + where;
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  return out;
}

// Minimal scanner over already-validated JSON text, used only to attach line numbers.
class Locator {
 public:
  explicit Locator(const std::string& s) : s_(s) {}

  std::size_t find(const std::vector<std::string>& tokens) {
    i_ = 0;
    ws();
    if (!seek(tokens, 0)) return 0;
    return 1 + static_cast<std::size_t>(std::count(s_.begin(), s_.begin() + static_cast<long>(i_), '\n'));
  }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::string string() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
      out += s_[i_++];
    }
    ++i_;
    return out;
  }

  void skip() {
    ws();
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++i_;
      ws();
      while (i_ < s_.size() && s_[i_] != close) {
        if (c == '{') {
          string();
          ws();
          ++i_;  // ':'
        }
        skip();
        ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        ws();
      }
      ++i_;
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' &&
             !std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      }
    }
  }

  bool seek(const std::vector<std::string>& tokens, std::size_t k) {
    ws();
    if (k == tokens.size()) return true;
    if (i_ >= s_.size()) return false;
    if (s_[i_] == '{') {
      ++i_;
      ws();
      while (i_ < s_.size() && s_[i_] != '}') {
        const std::string key = string();
        ws();
        ++i_;
        if (key == tokens[k]) return seek(tokens, k + 1);
        skip();
        ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        ws();
      }
      return false;
    }
    if (s_[i_] == '[') {
      std::size_t target = 0;
      try {
        target = std::stoul(tokens[k]);
      } catch (const std::exception&) {
        return false;
      }
      ++i_;
      for (std::size_t idx = 0;; ++idx) {
        ws();
        if (i_ >= s_.size() || s_[i_] == ']') return false;
        if (idx == target) return seek(tokens, k + 1);
        skip();
        ws();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
      }
    }
    return false;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

class Reader {
 public:
  explicit Reader(const std::string* text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message, const std::string& where) const {
    throw ConfigError(message, where, text_ ? locate_line(*text_, where) : 0);
  }

  void keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail("expected an object", where);
    for (const auto& [k, _] : obj.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
        fail("unknown key '" + k + "'", where + "/" + k);
      }
    }
  }

  const json& required(const json& obj, const char* key, const std::string& where) const {
    if (!obj.contains(key)) fail(std::string("missing required key '") + key + "'", where);
    return obj.at(key);
  }

  std::string text(const json& v, const std::string& where) const {
    if (!v.is_string()) fail("expected a string", where);
    return v.get<std::string>();
  }

  std::vector<std::string> names(const json& v, const std::string& where) const {
    if (!v.is_array()) fail("expected an array of coordinate names", where);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::string p = where + "/" + std::to_string(k);
      std::string name = text(v[k], p);
      try {
        const Expr e = sym::parse_expr(name);
        if (e.kind() != sym::Kind::Symbol) fail("'" + name + "' is not an identifier", p);
      } catch (const sym::ParseError&) {
        fail("'" + name + "' is not an identifier", p);
      }
      if (!seen.insert(name).second) fail("duplicate coordinate '" + name + "'", p);
      out.push_back(std::move(name));
    }
    if (out.size() < 2) fail("at least two coordinates are required", where);
    return out;
  }

  sym::DomainBox domain(const json* v, const std::string& where, const std::vector<std::string>& coords) const {
    sym::DomainBox box;
    if (v == nullptr) return box;
    if (!v->is_object()) fail("expected an object of intervals", where);
    for (const auto& [name, iv] : v->items()) {
      const std::string p = where + "/" + name;
      if (std::find(coords.begin(), coords.end(), name) == coords.end()) fail("unknown coordinate '" + name + "'", p);
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number()) {
        fail("expected [lo, hi]", p);
      }
      const double lo = iv[0].get<double>();
      const double hi = iv[1].get<double>();
      if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) fail("interval needs finite lo < hi", p);
      box.set(name, {lo, hi});
    }
    return box;
  }

  Expr expr(const json& v, const std::string& where, const std::vector<std::string>& symbols) const {
    std::string src;
    if (v.is_string()) {
      src = v.get<std::string>();
    } else if (v.is_number_integer()) {
      src = std::to_string(v.get<long long>());
    } else {
      fail("expected an expression string or integer", where);
    }
    Expr e;
    try {
      e = sym::parse_expr(src);
    } catch (const sym::ParseError& err) {
      fail(std::string("expression parse error: ") + err.what(), where);
    }
    for (const auto& s : e.symbols()) {
      if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) fail("unknown symbol '" + s + "'", where);
    }
    return e;
  }

  std::vector<Expr> vec(const json& v, const std::string& where, std::size_t n, const char* what,
                        const std::vector<std::string>& symbols) const {
    if (!v.is_array()) fail(std::string("expected an array for ") + what, where);
    if (v.size() != n) {
      fail(std::string("dimension error: ") + what + " has " + std::to_string(v.size()) + " components, expected " +
               std::to_string(n),
           where);
    }
    std::vector<Expr> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(expr(v[k], where + "/" + std::to_string(k), symbols));
    return out;
  }

  Matrix matrix(const json& v, const std::string& where, std::size_t n, const char* what,
                const std::vector<std::string>& symbols) const {
    if (!v.is_array()) fail(std::string("expected an array of rows for ") + what, where);
    if (v.size() != n) {
      fail(std::string("dimension error: ") + what + " has " + std::to_string(v.size()) + " rows, expected " +
               std::to_string(n),
           where);
    }
    Matrix out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(vec(v[k], where + "/" + std::to_string(k), n, what, symbols));
    return out;
  }

 private:
  const std::string* text_;
};

const std::vector<std::string> kQuantities = {"J",   "alpha", "A",  "w",  "h",     "G", "psi",
                                              "xi*", "eta*",  "u", "phi-u", "xi", "metric-normal"};

Highlight read_highlight(const Reader& rd, const json& v, const std::string& where,
                         const std::vector<std::string>& params) {
  rd.keys(v, where, {"id", "quantity", "index", "value", "compare", "expected_discrepancy", "note"});
  Highlight h;
  h.id = rd.text(rd.required(v, "id", where), where + "/id");
  h.quantity = rd.text(rd.required(v, "quantity", where), where + "/quantity");
  if (std::find(kQuantities.begin(), kQuantities.end(), h.quantity) == kQuantities.end()) {
    rd.fail("unknown quantity '" + h.quantity + "'", where + "/quantity");
  }
  if (v.contains("index")) {
    if (!v["index"].is_number_integer() || v["index"].get<long>() < 0) rd.fail("expected a non-negative integer", where + "/index");
    h.index = v["index"].get<int>();
  }
  h.value = rd.required(v, "value", where);
  const std::string vp = where + "/value";
  if (!h.value.is_array() || h.value.empty()) rd.fail("expected a vector or matrix of expressions", vp);
  for (std::size_t k = 0; k < h.value.size(); ++k) {
    const std::string p = vp + "/" + std::to_string(k);
    if (h.value[k].is_array()) {
      for (std::size_t j = 0; j < h.value[k].size(); ++j) rd.expr(h.value[k][j], p + "/" + std::to_string(j), params);
    } else {
      rd.expr(h.value[k], p, params);
    }
  }
  if (v.contains("compare")) {
    const std::string c = rd.text(v["compare"], where + "/compare");
    if (c != "equal" && c != "proportional") rd.fail("compare must be 'equal' or 'proportional'", where + "/compare");
    h.proportional = c == "proportional";
  }
  if (v.contains("expected_discrepancy")) {
    if (!v["expected_discrepancy"].is_boolean()) rd.fail("expected a boolean", where + "/expected_discrepancy");
    h.expected_discrepancy = v["expected_discrepancy"].get<bool>();
  }
  if (v.contains("note")) h.note = rd.text(v["note"], where + "/note");
  return h;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::string where, std::size_t line)
    : std::runtime_error(describe(message, where, line)), where_(std::move(where)), line_(line) {}

std::size_t locate_line(const std::string& text, const std::string& pointer) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < pointer.size()) {
    if (pointer[pos] != '/') return 0;
    const std::size_t next = pointer.find('/', pos + 1);
    std::string tok = pointer.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    std::string unescaped;
    for (std::size_t k = 0; k < tok.size(); ++k) {
      if (tok[k] == '~' && k + 1 < tok.size()) {
        unescaped += tok[k + 1] == '1' ? '/' : '~';
        ++k;
      } else {
        unescaped += tok[k];
      }
    }
    tokens.push_back(std::move(unescaped));
    pos = next == std::string::npos ? pointer.size() : next;
  }
  return Locator(text).find(tokens);
}

const std::vector<std::string>& structure_suites() {
  static const std::vector<std::string> s = {"ac",          "lap",         "lp-contact", "lp-sasakian",
                                             "normality",   "affine-cosymplectic", "automorphism"};
  return s;
}

const std::vector<std::string>& hypersurface_suites() {
  static const std::vector<std::string> s = {"classification", "decomposition", "gauss-weingarten",
                                             "product-metric", "noninvariant-lps", "invariant-lps",
                                             "affine-case",    "expectations"};
  return s;
}

bool wants_suite(const RunConfig& run, const std::string& suite) {
  return run.suites.empty() || std::find(run.suites.begin(), run.suites.end(), suite) != run.suites.end();
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str());
}

LoadedConfig load_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    const std::size_t upto = std::min<std::size_t>(err.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ConfigError(std::string("invalid JSON: ") + err.what(), "", line);
  }
  return load_config_json(doc, &text);
}

LoadedConfig load_config_json(const json& doc, const std::string* text) {
  const Reader rd(text);
  rd.keys(doc, "", {"schema", "name", "description", "coords", "domain", "phi", "xi", "eta", "e1", "e2", "metric",
                    "connection", "expected", "hypersurfaces", "run"});
  if (doc.contains("schema") && doc["schema"] != kConfigSchema) {
    rd.fail(std::string("unsupported schema, expected '") + kConfigSchema + "'", "/schema");
  }
  const std::string name = doc.contains("name") ? rd.text(doc["name"], "/name") : "config";
  const std::string description = doc.contains("description") ? rd.text(doc["description"], "/description") : "";
  const auto coords = rd.names(rd.required(doc, "coords", ""), "/coords");
  const std::size_t n = coords.size();
  const geo::Chart chart(coords, rd.domain(doc.contains("domain") ? &doc["domain"] : nullptr, "/domain", coords));

  const Matrix phi = rd.matrix(rd.required(doc, "phi", ""), "/phi", n, "phi", coords);
  const auto xi = rd.vec(rd.required(doc, "xi", ""), "/xi", n, "xi", coords);
  const auto eta = rd.vec(rd.required(doc, "eta", ""), "/eta", n, "eta", coords);
  auto sign = [&](const char* key) {
    if (!doc.contains(key)) return 1;
    const json& v = doc[key];
    if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
      rd.fail("expected 1 or -1", std::string("/") + key);
    }
    return v.get<int>();
  };
  const contact::AcStructure ac(geo::TensorField::from_matrix(chart, 1, 1, phi), geo::TensorField::vector(chart, xi),
                                geo::TensorField::one_form(chart, eta), sign("e1"), sign("e2"));

  RunConfig run;
  if (doc.contains("run")) {
    const json& r = doc["run"];
    rd.keys(r, "/run", {"seed", "points", "tol", "suites"});
    if (r.contains("seed")) {
      if (!r["seed"].is_number_unsigned()) rd.fail("expected a non-negative integer", "/run/seed");
      run.check.seed = r["seed"].get<std::uint64_t>();
    }
    if (r.contains("points")) {
      if (!r["points"].is_number_integer() || r["points"].get<int>() < 1) rd.fail("expected a positive integer", "/run/points");
      run.check.points = r["points"].get<int>();
    }
    if (r.contains("tol")) {
      if (!r["tol"].is_number() || !(r["tol"].get<double>() > 0)) rd.fail("expected a positive number", "/run/tol");
      run.check.tol = r["tol"].get<double>();
    }
    if (r.contains("suites")) {
      if (!r["suites"].is_array()) rd.fail("expected an array of suite names", "/run/suites");
      for (std::size_t k = 0; k < r["suites"].size(); ++k) {
        const std::string p = "/run/suites/" + std::to_string(k);
        const std::string s = rd.text(r["suites"][k], p);
        const auto& a = structure_suites();
        const auto& b = hypersurface_suites();
        if (std::find(a.begin(), a.end(), s) == a.end() && std::find(b.begin(), b.end(), s) == b.end()) {
          rd.fail("unknown suite '" + s + "'", p);
        }
        if (!doc.contains("metric") && (s == "lap" || s == "lp-contact" || s == "lp-sasakian" ||
                                        s == "product-metric" || s == "noninvariant-lps" || s == "invariant-lps")) {
          rd.fail("metric required for suite '" + s + "'", p);
        }
        run.suites.push_back(s);
      }
    }
  }

  std::optional<geo::MetricField> metric;
  if (doc.contains("metric")) {
    const Matrix g = rd.matrix(doc["metric"], "/metric", n, "metric", coords);
    try {
      metric.emplace(geo::TensorField::from_matrix(chart, 0, 2, g), run.check);
    } catch (const geo::GeometryError& err) {
      rd.fail(std::string("invalid metric: ") + err.what(), "/metric");
    } catch (const sym::EvalError& err) {
      rd.fail(std::string("invalid metric: ") + err.what(), "/metric");
    }
  }

  std::string connection_kind = metric ? "levi-civita" : "zero";
  std::optional<geo::Connection> connection;
  if (doc.contains("connection")) {
    const json& c = doc["connection"];
    if (c.is_string()) {
      connection_kind = c.get<std::string>();
      if (connection_kind != "levi-civita" && connection_kind != "zero") {
        rd.fail("connection must be 'levi-civita', 'zero' or an object", "/connection");
      }
      if (connection_kind == "levi-civita" && !metric) rd.fail("metric required for the Levi-Civita connection", "/connection");
    } else {
      rd.keys(c, "/connection", {"gamma", "torsion_free"});
      const json& gam = rd.required(c, "gamma", "/connection");
      const auto coeffs = rd.vec(gam, "/connection/gamma", n * n * n, "gamma", coords);
      bool tf = false;
      if (c.contains("torsion_free")) {
        if (!c["torsion_free"].is_boolean()) rd.fail("expected a boolean", "/connection/torsion_free");
        tf = c["torsion_free"].get<bool>();
      }
      try {
        connection.emplace(chart, coeffs, tf);
      } catch (const geo::GeometryError& err) {
        rd.fail(err.what(), "/connection");
      }
      connection_kind = "explicit";
    }
  }
  if (!connection) {
    if (connection_kind == "levi-civita") {
      connection.emplace(geo::levi_civita(*metric));
    } else {
      connection.emplace(chart, std::vector<Expr>(n * n * n, Expr(0)), true);
    }
  }

  std::map<std::string, bool> expected;
  if (doc.contains("expected")) {
    const json& e = doc["expected"];
    if (!e.is_object()) rd.fail("expected an object of suite verdicts", "/expected");
    for (const auto& [suite, verdict] : e.items()) {
      const auto& a = structure_suites();
      if (std::find(a.begin(), a.end(), suite) == a.end()) rd.fail("unknown suite '" + suite + "'", "/expected/" + suite);
      if (!verdict.is_boolean()) rd.fail("expected a boolean", "/expected/" + suite);
      expected[suite] = verdict.get<bool>();
    }
  }

  std::vector<HypersurfaceDef> hypersurfaces;
  if (doc.contains("hypersurfaces")) {
    const json& hs = doc["hypersurfaces"];
    if (!hs.is_array()) rd.fail("expected an array", "/hypersurfaces");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const std::string w = "/hypersurfaces/" + std::to_string(k);
      const json& h = hs[k];
      rd.keys(h, w, {"name", "params", "domain", "map", "transversal", "affine", "expected"});
      const std::string hname = rd.text(rd.required(h, "name", w), w + "/name");
      if (!seen.insert(hname).second) rd.fail("duplicate hypersurface name '" + hname + "'", w + "/name");
      const auto params = rd.names(rd.required(h, "params", w), w + "/params");
      if (params.size() + 1 != n) {
        rd.fail("dimension error: a hypersurface needs " + std::to_string(n - 1) + " parameters", w + "/params");
      }
      const geo::Chart pchart(params, rd.domain(h.contains("domain") ? &h["domain"] : nullptr, w + "/domain", params));
      const auto map = rd.vec(rd.required(h, "map", w), w + "/map", n, "map", params);

      hyp::TransversalChoice tc;
      bool given = false;
      if (h.contains("transversal")) {
        given = true;
        const json& t = h["transversal"];
        if (t.is_string()) {
          const std::string kind = t.get<std::string>();
          if (kind == "characteristic") {
            tc = hyp::TransversalChoice::characteristic();
          } else if (kind == "metric-normal") {
            if (!metric) rd.fail("metric required for the metric normal", w + "/transversal");
            tc = hyp::TransversalChoice::metric_normal();
          } else {
            rd.fail("transversal must be 'characteristic', 'metric-normal' or {\"field\": [...]}", w + "/transversal");
          }
        } else {
          rd.keys(t, w + "/transversal", {"field"});
          const auto f = rd.vec(rd.required(t, "field", w + "/transversal"), w + "/transversal/field", n, "field", coords);
          tc = hyp::TransversalChoice::user(geo::TensorField::vector(chart, f));
        }
      }
      hyp::AffineMode mode = hyp::AffineMode::Auto;
      if (h.contains("affine")) {
        const std::string a = rd.text(h["affine"], w + "/affine");
        if (a != "auto" && a != "assert") rd.fail("affine must be 'auto' or 'assert'", w + "/affine");
        mode = a == "assert" ? hyp::AffineMode::Assert : hyp::AffineMode::Auto;
      }
      std::optional<std::string> cls;
      std::vector<Highlight> highlights;
      if (h.contains("expected")) {
        const json& e = h["expected"];
        rd.keys(e, w + "/expected", {"classification", "highlights"});
        if (e.contains("classification")) {
          const std::string c = rd.text(e["classification"], w + "/expected/classification");
          static const std::set<std::string> tags = {"invariant-tangent-xi", "invariant-transversal-xi",
                                                     "noninvariant-transversal-xi", "noninvariant-tangent-xi", "mixed"};
          if (!tags.count(c)) rd.fail("unknown classification '" + c + "'", w + "/expected/classification");
          cls = c;
        }
        if (e.contains("highlights")) {
          const json& hl = e["highlights"];
          if (!hl.is_array()) rd.fail("expected an array", w + "/expected/highlights");
          for (std::size_t j = 0; j < hl.size(); ++j) {
            highlights.push_back(read_highlight(rd, hl[j], w + "/expected/highlights/" + std::to_string(j), params));
          }
        }
      }
      hypersurfaces.push_back(HypersurfaceDef{hname, hyp::Immersion(pchart, chart, map), tc, given, mode, cls,
                                              std::move(highlights)});
    }
  }

  return LoadedConfig{
      StructureDef{name, description, ac, std::move(metric), std::move(*connection), connection_kind,
                   std::move(expected), std::move(hypersurfaces)},
      run, doc};
}

}  // namespace lps::harness

namespace lps::harness {

namespace {

json domain_json(const geo::Chart& chart) {
  json d = json::object();
  for (const auto& [name, iv] : chart.domain().explicit_intervals()) d[name] = json::array({iv.lo, iv.hi});
  return d;
}

json strings(const std::vector<geo::Expr>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

json rows(const geo::TensorField& t) {
  json out = json::array();
  for (const auto& row : t.matrix()) out.push_back(strings(row));
  return out;
}

}  // namespace

json export_config(const LoadedConfig& config) {
  const StructureDef& s = config.structure;
  const geo::Chart& chart = s.ac.chart();
  json doc;
  doc["schema"] = kConfigSchema;
  doc["name"] = s.name;
  if (!s.description.empty()) doc["description"] = s.description;
  doc["coords"] = chart.coords();
  if (!chart.domain().explicit_intervals().empty()) doc["domain"] = domain_json(chart);
  doc["phi"] = rows(s.ac.phi());
  doc["xi"] = strings(s.ac.xi().components());
  doc["eta"] = strings(s.ac.eta().components());
  doc["e1"] = s.ac.e1();
  doc["e2"] = s.ac.e2();
  if (s.metric) doc["metric"] = rows(s.metric->tensor());
  if (s.connection_kind == "explicit") {
    doc["connection"] = {{"gamma", strings(s.connection.coefficients())}, {"torsion_free", s.connection.torsion_free()}};
  } else {
    doc["connection"] = s.connection_kind;
  }
  if (!s.expected.empty()) {
    json e = json::object();
    for (const auto& [k, v] : s.expected) e[k] = v;
    doc["expected"] = e;
  }
  if (!s.hypersurfaces.empty()) {
    json hs = json::array();
    for (const auto& h : s.hypersurfaces) {
      json j;
      j["name"] = h.name;
      j["params"] = h.immersion.params().coords();
      if (!h.immersion.params().domain().explicit_intervals().empty()) j["domain"] = domain_json(h.immersion.params());
      j["map"] = strings(h.immersion.map());
      if (h.transversal_given) {
        switch (h.transversal.kind) {
          case hyp::TransversalKind::Characteristic: j["transversal"] = "characteristic"; break;
          case hyp::TransversalKind::MetricNormal: j["transversal"] = "metric-normal"; break;
          case hyp::TransversalKind::UserField:
            j["transversal"] = {{"field", strings(h.transversal.field->components())}};
            break;
        }
      }
      if (h.affine == hyp::AffineMode::Assert) j["affine"] = "assert";
      if (h.expected_classification || !h.highlights.empty()) {
        json e = json::object();
        if (h.expected_classification) e["classification"] = *h.expected_classification;
        if (!h.highlights.empty()) {
          json hl = json::array();
          for (const auto& x : h.highlights) {
            json one;
            one["id"] = x.id;
            one["quantity"] = x.quantity;
            if (x.quantity == "u" || x.quantity == "phi-u") one["index"] = x.index;
            one["value"] = x.value;
            one["compare"] = x.proportional ? "proportional" : "equal";
            one["expected_discrepancy"] = x.expected_discrepancy;
            if (!x.note.empty()) one["note"] = x.note;
            hl.push_back(std::move(one));
          }
          e["highlights"] = std::move(hl);
        }
        j["expected"] = std::move(e);
      }
      hs.push_back(std::move(j));
    }
    doc["hypersurfaces"] = std::move(hs);
  }
  json run;
  run["seed"] = config.run.check.seed;
  run["points"] = config.run.check.points;
  run["tol"] = config.run.check.tol;
  if (!config.run.suites.empty()) run["suites"] = config.run.suites;
  doc["run"] = std::move(run);
  return doc;
}

}  // namespace lps::harness
