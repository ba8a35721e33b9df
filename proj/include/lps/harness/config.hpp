#pragma once

#include "lps/hypersurface/theorems.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lps::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kConfigSchema = "lps-config/1";

/// Invalid input document. `where` is a JSON pointer, `line` is 1-based or 0 when unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::string where = {}, std::size_t line = 0);
  const std::string& where() const noexcept { return where_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string where_;
  std::size_t line_;
};

/// A registry or config value the analysis is compared against.
struct Highlight {
  std::string id;
  std::string quantity;  // J, alpha, A, w, h, G, psi, xi*, eta*, u, phi-u, xi, metric-normal
  int index = 0;         // frame index for u and phi-u
  json value;            // expression strings: vector or matrix
  bool proportional = false;
  bool expected_discrepancy = false;
  std::string note;
};

struct HypersurfaceDef {
  std::string name;
  hyp::Immersion immersion;
  hyp::TransversalChoice transversal;
  bool transversal_given = false;
  hyp::AffineMode affine = hyp::AffineMode::Auto;
  std::optional<std::string> expected_classification;
  std::vector<Highlight> highlights;
};

struct StructureDef {
  std::string name;
  std::string description;
  contact::AcStructure ac;
  std::optional<geo::MetricField> metric;
  geo::Connection connection;
  std::string connection_kind;  // levi-civita, zero or explicit
  std::map<std::string, bool> expected;  // suite name -> expected verdict
  std::vector<HypersurfaceDef> hypersurfaces;
};

struct RunConfig {
  geo::CheckConfig check;
  std::vector<std::string> suites;  // empty: every applicable suite
};

struct LoadedConfig {
  StructureDef structure;
  RunConfig run;
  json source;
};

const std::vector<std::string>& structure_suites();
const std::vector<std::string>& hypersurface_suites();
bool wants_suite(const RunConfig& run, const std::string& suite);

LoadedConfig load_config(const std::string& path);
LoadedConfig load_config_text(const std::string& text);
/// `text`, when given, is used to attach line numbers to errors.
LoadedConfig load_config_json(const json& doc, const std::string* text = nullptr);

/// Serializes the loaded objects back into the config format.
json export_config(const LoadedConfig& config);

/// 1-based line of the value at a JSON pointer inside well-formed JSON text; 0 if not found.
std::size_t locate_line(const std::string& text, const std::string& pointer);

}  // namespace lps::harness
