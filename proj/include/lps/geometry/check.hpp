#pragma once

#include "lps/geometry/chart.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lps::geo {

struct CheckConfig {
  std::uint64_t seed = 42;
  int points = 20;
  double tol = 1e-9;
};

enum class EntryKind {
  Identity,     // must hold
  Finding,      // recorded either way
  Discrepancy,  // a reference value compared against the recomputed one
};

std::string_view entry_kind_name(EntryKind k);

struct CheckEntry {
  std::string id;
  std::string identity;
  EntryKind kind = EntryKind::Identity;
  bool holds = false;
  double max_residual = 0.0;
  bool symbolic = false;  // decided by canonical simplification alone
  std::string witness;
  std::string note;
  bool expected_discrepancy = false;

  /// Identity: holds. Finding: always. Discrepancy: holds unless a mismatch is expected.
  bool ok() const noexcept;
};

struct ExprPair {
  Expr lhs;
  Expr rhs;
  std::string label;
};

/// Symbolic-then-sampled check that lhs == rhs for every pair.
///
/// Pairs whose difference simplifies to 0 are settled symbolically. The rest
/// are evaluated at cfg.points seeded points of the chart's box; the entry
/// fails at the first point whose relative residual exceeds cfg.tol and
/// records that point and pair as the witness.
CheckEntry check_identity(std::string id, std::string identity, const std::vector<ExprPair>& pairs,
                          const Chart& chart, const CheckConfig& cfg,
                          EntryKind kind = EntryKind::Identity);

std::vector<sym::SamplePoint> sample_points(const Chart& chart, const CheckConfig& cfg,
                                            std::span<const Expr> exprs = {});

struct StructureReport {
  std::string title;
  std::vector<std::string> notes;
  std::vector<CheckEntry> entries;

  bool passed() const noexcept;
  const CheckEntry* find(std::string_view id) const noexcept;
  void append(const StructureReport& other);
};

}  // namespace lps::geo
