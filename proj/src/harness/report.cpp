#include "lps/harness/report.hpp"

#include <iomanip>
#include <sstream>

namespace lps::harness {

bool Subject::passed() const noexcept {
  if (!errors.empty()) return false;
  for (const auto& s : sections) {
    if (!s.passed()) return false;
  }
  return true;
}

bool Report::passed() const noexcept {
  for (const auto& s : subjects) {
    if (!s.passed()) return false;
  }
  return true;
}

namespace {

json entry_json(const geo::CheckEntry& e) {
  json j;
  j["theorem"] = e.id;
  j["identity"] = e.identity;
  j["kind"] = geo::entry_kind_name(e.kind);
  j["pass"] = e.ok();
  j["holds"] = e.holds;
  j["max_residual"] = e.max_residual;
  j["symbolic"] = e.symbolic;
  j["expected_discrepancy"] = e.expected_discrepancy;
  j["witness"] = e.witness.empty() ? json(nullptr) : json(e.witness);
  j["note"] = e.note.empty() ? json(nullptr) : json(e.note);
  return j;
}

std::string residual_text(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << r;
  return os.str();
}

}  // namespace

json report_json(const Report& r) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = r.command;
  doc["target"] = r.target;
  doc["config"] = {{"seed", r.config.seed}, {"points", r.config.points}, {"tol", r.config.tol}};
  doc["pass"] = r.passed();
  json subjects = json::array();
  for (const auto& s : r.subjects) {
    json js;
    js["id"] = s.id;
    js["kind"] = s.kind;
    js["pass"] = s.passed();
    json values = json::object();
    for (const auto& [k, v] : s.values) values[k] = v;
    js["values"] = std::move(values);
    js["notes"] = s.notes;
    js["errors"] = s.errors;
    json sections = json::array();
    for (const auto& sec : s.sections) {
      json jsec;
      jsec["name"] = sec.name;
      jsec["title"] = sec.report.title;
      jsec["pass"] = sec.passed();
      jsec["expected_pass"] = sec.expected ? json(*sec.expected) : json(nullptr);
      jsec["notes"] = sec.report.notes;
      json entries = json::array();
      for (const auto& e : sec.report.entries) entries.push_back(entry_json(e));
      jsec["entries"] = std::move(entries);
      sections.push_back(std::move(jsec));
    }
    js["sections"] = std::move(sections);
    subjects.push_back(std::move(js));
  }
  doc["subjects"] = std::move(subjects);
  return doc;
}

std::string emit_report(const Report& r, Format format) {
  if (format == Format::Json) return report_json(r).dump(2) + "\n";

  std::ostringstream os;
  os << r.command;
  if (!r.target.empty()) os << ' ' << r.target;
  os << "  (seed " << r.config.seed << ", " << r.config.points << " points, tol " << r.config.tol << ")\n";
  for (const auto& s : r.subjects) {
    os << "\n== " << s.id << " [" << s.kind << "] " << (s.passed() ? "PASS" : "FAIL") << "\n";
    std::size_t width = 0;
    for (const auto& [k, _] : s.values) width = std::max(width, k.size());
    for (const auto& [k, v] : s.values) os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
    for (const auto& n : s.notes) os << "  note: " << n << "\n";
    for (const auto& e : s.errors) os << "  error: " << e << "\n";
    for (const auto& sec : s.sections) {
      os << "  -- " << sec.name << ": " << sec.report.title << "  " << (sec.passed() ? "PASS" : "FAIL");
      if (sec.expected) os << " (expected " << (*sec.expected ? "to hold" : "to fail") << ")";
      os << "\n";
      for (const auto& n : sec.report.notes) os << "     note: " << n << "\n";
      for (const auto& e : sec.report.entries) {
        os << "     " << (e.ok() ? "ok  " : "FAIL") << "  " << std::left << std::setw(20) << e.id << ' '
           << std::setw(11) << geo::entry_kind_name(e.kind) << ' ' << (e.holds ? "holds " : "fails ")
           << residual_text(e.max_residual) << (e.symbolic ? " sym  " : "      ") << e.identity << "\n";
        if (!e.witness.empty()) os << "           witness: " << e.witness << "\n";
        if (!e.note.empty()) os << "           note: " << e.note << "\n";
      }
    }
  }
  os << "\n" << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace lps::harness
