#pragma once

#include "lps/harness/registry.hpp"
#include "lps/harness/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lps::harness {

/// Command-line values that take precedence over a config's run section.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<double> tol;
};

geo::CheckConfig effective_config(const RunConfig& run, const Overrides& o);

/// Registry structure id or path to a config file. Throws ConfigError.
LoadedConfig resolve_structure(const std::string& target);

struct HypersurfaceTarget {
  LoadedConfig config;
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;
};

/// Registry hypersurface id, registry structure id (all of its hypersurfaces)
/// or config path. Throws ConfigError.
HypersurfaceTarget resolve_hypersurfaces(const std::string& target);

Subject check_structure(const LoadedConfig& config, const geo::CheckConfig& cfg, const std::string& id);
Subject analyze_hypersurface(const LoadedConfig& config, std::size_t index, const geo::CheckConfig& cfg,
                             const std::string& id);

Report cmd_check_structure(const std::string& target, const Overrides& o = {});
Report cmd_analyze(const std::string& target, const Overrides& o = {});
/// Every structure and hypersurface of the target, or of the whole registry
/// when no target is given. Subjects run concurrently; the order is fixed.
Report cmd_verify_theorems(const std::optional<std::string>& target, const Overrides& o = {});

std::string list_examples(Format format);
/// Config document for a registry id. Hypersurface ids keep only that hypersurface.
json export_example(const std::string& id);

}  // namespace lps::harness
