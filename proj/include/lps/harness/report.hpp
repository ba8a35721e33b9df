#pragma once

#include "lps/harness/config.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lps::harness {

inline constexpr const char* kReportSchema = "lps-report/1";

/// One verifier suite's output. A suite with an expected verdict passes when
/// its outcome matches the expectation.
struct Section {
  std::string name;
  geo::StructureReport report;
  std::optional<bool> expected;

  bool passed() const noexcept { return expected ? report.passed() == *expected : report.passed(); }
};

struct Subject {
  std::string id;
  std::string kind;  // "structure" or "hypersurface"
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> notes;
  std::vector<std::string> errors;
  std::vector<Section> sections;

  bool passed() const noexcept;
};

struct Report {
  std::string command;
  std::string target;
  geo::CheckConfig config;
  std::vector<Subject> subjects;

  bool passed() const noexcept;
};

enum class Format { Text, Json };

json report_json(const Report& r);
std::string emit_report(const Report& r, Format format);

}  // namespace lps::harness
