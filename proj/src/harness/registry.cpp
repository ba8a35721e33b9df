#include "lps/harness/registry.hpp"

#include <map>

namespace lps::harness {

namespace {

const char* const kExample61 = R"json({
  "schema": "lps-config/1",
  "name": "6.1",
  "description": "R^5 with eta = ds - dx - dz and xi = -d_s, zero connection",
  "coords": ["x", "y", "z", "t", "s"],
  "phi": [["-1", "0", "0", "0", "0"],
          ["0", "-1", "0", "0", "0"],
          ["0", "0", "-1", "0", "0"],
          ["0", "0", "0", "-1", "0"],
          ["-1", "0", "-1", "0", "0"]],
  "xi": ["0", "0", "0", "0", "-1"],
  "eta": ["-1", "0", "-1", "0", "1"],
  "connection": "zero",
  "expected": {"ac": true, "normality": true, "affine-cosymplectic": true},
  "hypersurfaces": [
    {
      "name": "M1",
      "params": ["x", "y", "z", "t"],
      "map": ["x", "y", "z", "t", "x"],
      "transversal": "characteristic",
      "expected": {
        "classification": "noninvariant-transversal-xi",
        "highlights": [
          {"id": "u1", "quantity": "u", "index": 0, "value": ["1", "0", "0", "0", "1"]},
          {"id": "J", "quantity": "J",
           "value": [["-1", "0", "0", "0"], ["0", "-1", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "-1"]]},
          {"id": "alpha", "quantity": "alpha", "value": ["0", "0", "1", "0"]}
        ]
      }
    },
    {
      "name": "M2",
      "params": ["y", "z", "t", "s"],
      "map": ["y", "y", "z", "t", "s"],
      "transversal": {"field": ["1", "-1", "0", "0", "0"]},
      "affine": "assert",
      "expected": {
        "classification": "invariant-tangent-xi",
        "highlights": [
          {"id": "psi", "quantity": "psi",
           "value": [["-1", "0", "0", "0"], ["0", "-1", "0", "0"], ["0", "0", "-1", "0"], ["-1", "-1", "0", "0"]]},
          {"id": "xi*", "quantity": "xi*", "value": ["0", "0", "0", "-1"]},
          {"id": "eta*", "quantity": "eta*", "value": ["-1", "-1", "0", "1"]}
        ]
      }
    }
  ]
})json";

const char* const kExample62 = R"json({
  "schema": "lps-config/1",
  "name": "6.2",
  "description": "R^5 with eta = ds - dx, g = dx^2 + dy^2 + dz^2 + dt^2 - eta (x) eta",
  "coords": ["x", "y", "z", "t", "s"],
  "phi": [["1", "0", "0", "0", "0"],
          ["0", "1", "0", "0", "0"],
          ["0", "0", "1", "0", "0"],
          ["0", "0", "0", "1", "0"],
          ["1", "0", "0", "0", "0"]],
  "xi": ["0", "0", "0", "0", "-1"],
  "eta": ["-1", "0", "0", "0", "1"],
  "metric": [["0", "0", "0", "0", "1"],
             ["0", "1", "0", "0", "0"],
             ["0", "0", "1", "0", "0"],
             ["0", "0", "0", "1", "0"],
             ["1", "0", "0", "0", "-1"]],
  "expected": {"ac": true, "lap": true, "lp-contact": false, "lp-sasakian": false, "normality": true},
  "hypersurfaces": [
    {
      "name": "M",
      "params": ["x", "y", "z", "t"],
      "map": ["x", "y", "z", "t", "x"],
      "transversal": "characteristic",
      "expected": {
        "classification": "invariant-transversal-xi",
        "highlights": [
          {"id": "J", "quantity": "J",
           "value": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
          {"id": "alpha", "quantity": "alpha", "value": ["0", "0", "0", "0"]},
          {"id": "xi-printed", "quantity": "xi", "value": ["0", "0", "0", "0", "1"],
           "expected_discrepancy": true,
           "note": "printed xi = (u1 - N)/2 with N = (1,0,0,0,-1) is +d_s"},
          {"id": "xi-recomputed", "quantity": "xi", "value": ["0", "0", "0", "0", "-1"],
           "note": "xi = -(u1 - N)/2"}
        ]
      }
    }
  ]
})json";

const char* const kExample63 = R"json({
  "schema": "lps-config/1",
  "name": "6.3",
  "description": "R^3 with phi = diag(-1, -1, 0), flat Lorentzian metric diag(1, 1, -1)",
  "coords": ["x", "y", "z"],
  "phi": [["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "0"]],
  "xi": ["0", "0", "-1"],
  "eta": ["0", "0", "1"],
  "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]],
  "expected": {"ac": true, "lap": true, "lp-contact": false, "lp-sasakian": false, "normality": true},
  "hypersurfaces": [
    {
      "name": "M",
      "params": ["y", "z"],
      "domain": {"y": [-0.9, 0.9]},
      "map": ["arcsin(y)", "y", "z"],
      "transversal": "metric-normal",
      "expected": {
        "classification": "invariant-tangent-xi",
        "highlights": [
          {"id": "psi", "quantity": "psi", "value": [["-1", "0"], ["0", "0"]]},
          {"id": "xi*", "quantity": "xi*", "value": ["0", "-1"]},
          {"id": "eta*", "quantity": "eta*", "value": ["0", "1"]}
        ]
      }
    }
  ]
})json";

const char* const kExample64 = R"json({
  "schema": "lps-config/1",
  "name": "6.4",
  "description": "R^3 with phi = diag(1, -1, 0), g = diag(exp(-2z), exp(2z), -1), Lorentzian para-Sasakian",
  "coords": ["x", "y", "z"],
  "phi": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "0"]],
  "xi": ["0", "0", "-1"],
  "eta": ["0", "0", "1"],
  "metric": [["exp(-2*z)", "0", "0"], ["0", "exp(2*z)", "0"], ["0", "0", "-1"]],
  "expected": {"ac": true, "lap": true, "lp-contact": true, "lp-sasakian": true, "normality": true,
               "affine-cosymplectic": false},
  "hypersurfaces": [
    {
      "name": "M1",
      "params": ["x", "y"],
      "map": ["x", "y", "x + y"],
      "transversal": "characteristic",
      "expected": {
        "classification": "noninvariant-transversal-xi",
        "highlights": [
          {"id": "u1", "quantity": "u", "index": 0, "value": ["1", "0", "1"]},
          {"id": "u2", "quantity": "u", "index": 1, "value": ["0", "1", "1"]},
          {"id": "J", "quantity": "J", "value": [["1", "0"], ["0", "-1"]]},
          {"id": "alpha", "quantity": "alpha", "value": ["1", "-1"]},
          {"id": "A", "quantity": "A", "value": [["-1", "0"], ["0", "1"]]},
          {"id": "w", "quantity": "w", "value": ["1", "-1"]},
          {"id": "G", "quantity": "G", "value": [["exp(-2*(x + y))", "-2"], ["-2", "exp(2*(x + y))"]]},
          {"id": "normal-printed", "quantity": "metric-normal", "compare": "proportional",
           "value": ["exp(2*(x + y))", "exp(2*(x + y))", "1"], "expected_discrepancy": true,
           "note": "printed second component fails g(N, u2) = 0"},
          {"id": "normal-recomputed", "quantity": "metric-normal", "compare": "proportional",
           "value": ["exp(2*(x + y))", "exp(-2*(x + y))", "1"]}
        ]
      }
    },
    {
      "name": "M2",
      "params": ["y", "z"],
      "map": ["arctan(y)", "y", "z"],
      "transversal": "metric-normal",
      "expected": {
        "classification": "noninvariant-tangent-xi",
        "highlights": [
          {"id": "v1", "quantity": "u", "index": 0, "value": ["1/(1 + y^2)", "1", "0"]},
          {"id": "normal", "quantity": "metric-normal", "compare": "proportional",
           "value": ["exp(2*z)", "-exp(-2*z)/(1 + y^2)", "0"]},
          {"id": "phi-v1-printed", "quantity": "phi-u", "index": 0, "expected_discrepancy": true,
           "value": ["-1/(1 + y^2) + 2*(1 + y^2)/((1 + y^2)^2*exp(2*z) - exp(-2*z))*exp(2*z)",
                     "-1 - 2*(1 + y^2)/((1 + y^2)^2*exp(2*z) - exp(-2*z))*exp(-2*z)/(1 + y^2)",
                     "0"],
           "note": "printed phi(v1) = -(v1 - 2(1+y^2)/((1+y^2)^2 e^{2z} - e^{-2z}) N)"},
          {"id": "phi-v1-recomputed", "quantity": "phi-u", "index": 0,
           "value": ["(exp(-2*z) - (1 + y^2)^2*exp(2*z))/((1 + y^2)^2*exp(2*z) + exp(-2*z))/(1 + y^2) + 2*(1 + y^2)/((1 + y^2)^2*exp(2*z) + exp(-2*z))*exp(2*z)",
                     "(exp(-2*z) - (1 + y^2)^2*exp(2*z))/((1 + y^2)^2*exp(2*z) + exp(-2*z)) - 2*(1 + y^2)/((1 + y^2)^2*exp(2*z) + exp(-2*z))*exp(-2*z)/(1 + y^2)",
                     "0"],
           "note": "phi(v1) = a v1 + c N with c = 2(1+y^2)/((1+y^2)^2 e^{2z} + e^{-2z})"}
        ]
      }
    },
    {
      "name": "S",
      "params": ["y", "z"],
      "map": ["0", "y", "z"],
      "transversal": "metric-normal",
      "expected": {"classification": "invariant-tangent-xi"}
    }
  ]
})json";

const std::map<std::string, const char*>& documents() {
  static const std::map<std::string, const char*> docs = {
      {"6.1", kExample61}, {"6.2", kExample62}, {"6.3", kExample63}, {"6.4", kExample64}};
  return docs;
}

}  // namespace

const std::vector<ExampleSpec>& examples() {
  static const std::vector<ExampleSpec> list = {
      {"6.1", "6.1", std::nullopt, "(1,1,1) almost contact structure on R^5 with the zero connection"},
      {"6.2", "6.2", std::nullopt, "Lorentzian almost paracontact structure on R^5"},
      {"6.3", "6.3", std::nullopt, "Lorentzian almost paracontact structure on flat R^3"},
      {"6.4", "6.4", std::nullopt, "Lorentzian para-Sasakian structure on R^3"},
      {"6.1/M1", "6.1", "M1", "s = x: noninvariant, xi transversal"},
      {"6.1/M2", "6.1", "M2", "x = y: invariant, xi tangent"},
      {"6.2", "6.2", "M", "s = x: invariant, xi transversal"},
      {"6.3", "6.3", "M", "x = arcsin y: invariant, xi tangent"},
      {"6.4/M1", "6.4", "M1", "z = x + y: noninvariant, xi transversal"},
      {"6.4/M2", "6.4", "M2", "x = arctan y: noninvariant, xi tangent"},
      {"6.4/S", "6.4", "S", "x = 0: invariant, xi tangent (para-Sasakian induced structure)"},
  };
  return list;
}

std::vector<std::string> structure_ids() {
  std::vector<std::string> out;
  for (const auto& [id, _] : documents()) out.push_back(id);
  return out;
}

const std::string* registry_document(const std::string& structure_id) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> m;
    for (const auto& [id, text] : documents()) m.emplace(id, text);
    return m;
  }();
  const auto it = texts.find(structure_id);
  return it == texts.end() ? nullptr : &it->second;
}

const ExampleSpec* find_example(const std::string& id, bool hypersurface) {
  for (const auto& e : examples()) {
    if (e.id == id && e.hypersurface.has_value() == hypersurface) return &e;
  }
  return nullptr;
}

LoadedConfig load_example(const std::string& structure_id) {
  const std::string* text = registry_document(structure_id);
  if (text == nullptr) throw ConfigError("unknown example '" + structure_id + "'");
  return load_config_text(*text);
}

}  // namespace lps::harness
