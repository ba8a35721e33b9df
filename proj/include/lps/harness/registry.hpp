#pragma once

#include "lps/harness/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lps::harness {

struct ExampleSpec {
  std::string id;         // "6.4/M1"
  std::string structure;  // "6.4"
  std::optional<std::string> hypersurface;  // "M1"; empty for structure entries
  std::string description;
};

/// Structure entries first, then hypersurface entries, in a fixed order.
const std::vector<ExampleSpec>& examples();

/// Ids of the built-in ambient structures.
std::vector<std::string> structure_ids();

/// The built-in config document for a structure id, or nullptr.
const std::string* registry_document(const std::string& structure_id);

const ExampleSpec* find_example(const std::string& id, bool hypersurface);

LoadedConfig load_example(const std::string& structure_id);

}  // namespace lps::harness
