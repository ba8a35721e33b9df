#include "lps/geometry/check.hpp"

#include <algorithm>
#include <sstream>

namespace lps::geo {

std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Identity: return "identity";
    case EntryKind::Finding: return "finding";
    case EntryKind::Discrepancy: return "discrepancy";
  }
  return "identity";
}

bool CheckEntry::ok() const noexcept {
  switch (kind) {
    case EntryKind::Identity: return holds;
    case EntryKind::Finding: return true;
    case EntryKind::Discrepancy: return holds != expected_discrepancy;
  }
  return holds;
}

std::vector<sym::SamplePoint> sample_points(const Chart& chart, const CheckConfig& cfg,
                                            std::span<const Expr> exprs) {
  sym::Sampler sampler(cfg.seed);
  return sampler.draw_valid(chart.domain(), chart.coords(), exprs, cfg.points);
}

CheckEntry check_identity(std::string id, std::string identity, const std::vector<ExprPair>& pairs,
                          const Chart& chart, const CheckConfig& cfg, EntryKind kind) {
  CheckEntry entry;
  entry.id = std::move(id);
  entry.identity = std::move(identity);
  entry.kind = kind;

  std::vector<const ExprPair*> pending;
  std::vector<Expr> exprs;
  for (const auto& p : pairs) {
    if ((p.lhs - p.rhs).is_zero()) continue;
    pending.push_back(&p);
    exprs.push_back(p.lhs);
    exprs.push_back(p.rhs);
  }
  if (pending.empty()) {
    entry.holds = true;
    entry.symbolic = true;
    return entry;
  }

  std::vector<sym::SamplePoint> points;
  try {
    points = sample_points(chart, cfg, exprs);
  } catch (const sym::EvalError& err) {
    entry.holds = false;
    entry.note = std::string("sampling failed: ") + err.what();
    return entry;
  }

  double worst = 0.0;
  for (const auto& pt : points) {
    for (const ExprPair* p : pending) {
      const double l = sym::eval(p->lhs, pt);
      const double r = sym::eval(p->rhs, pt);
      const double res = sym::relative_residual(l, r);
      if (res > cfg.tol && entry.witness.empty()) {
        std::ostringstream os;
        os.precision(10);
        os << p->label << " at " << pt.str() << ": lhs=" << l << " rhs=" << r;
        entry.witness = os.str();
      }
      worst = std::max(worst, res);
    }
  }
  entry.max_residual = worst;
  entry.holds = worst <= cfg.tol;
  return entry;
}

bool StructureReport::passed() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.ok(); });
}

const CheckEntry* StructureReport::find(std::string_view id) const noexcept {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

void StructureReport::append(const StructureReport& other) {
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

}  // namespace lps::geo
