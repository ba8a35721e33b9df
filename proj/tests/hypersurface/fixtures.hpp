#pragma once

#include "lps/contact/structure.hpp"
#include "lps/hypersurface/immersion.hpp"

#include "generators.hpp"

namespace lps::testing {

using Rows = std::vector<std::vector<std::string>>;

inline geo::TensorField matrix_field(const geo::Chart& c, int up, int down, const Rows& rows) {
  geo::Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& s : r) m.back().push_back(canon(s));
  }
  return geo::TensorField::from_matrix(c, up, down, m);
}

inline std::vector<sym::Expr> exprs(const std::vector<std::string>& v) {
  std::vector<sym::Expr> out;
  for (const auto& s : v) out.push_back(canon(s));
  return out;
}

inline const geo::Chart& r3() {
  static const geo::Chart c({"x", "y", "z"});
  return c;
}

inline const geo::Chart& r5() {
  static const geo::Chart c({"x", "y", "z", "t", "s"});
  return c;
}

inline contact::AcStructure structure_61() {
  return contact::AcStructure(matrix_field(r5(), 1, 1,
                                           {{"-1", "0", "0", "0", "0"},
                                            {"0", "-1", "0", "0", "0"},
                                            {"0", "0", "-1", "0", "0"},
                                            {"0", "0", "0", "-1", "0"},
                                            {"-1", "0", "-1", "0", "0"}}),
                              geo::TensorField::vector(r5(), exprs({"0", "0", "0", "0", "-1"})),
                              geo::TensorField::one_form(r5(), exprs({"-1", "0", "-1", "0", "1"})));
}

inline contact::LapStructure structure_62() {
  const contact::AcStructure ac(matrix_field(r5(), 1, 1,
                                             {{"1", "0", "0", "0", "0"},
                                              {"0", "1", "0", "0", "0"},
                                              {"0", "0", "1", "0", "0"},
                                              {"0", "0", "0", "1", "0"},
                                              {"1", "0", "0", "0", "0"}}),
                                geo::TensorField::vector(r5(), exprs({"0", "0", "0", "0", "-1"})),
                                geo::TensorField::one_form(r5(), exprs({"-1", "0", "0", "0", "1"})));
  return contact::LapStructure(ac, geo::MetricField(matrix_field(r5(), 0, 2,
                                                                 {{"0", "0", "0", "0", "1"},
                                                                  {"0", "1", "0", "0", "0"},
                                                                  {"0", "0", "1", "0", "0"},
                                                                  {"0", "0", "0", "1", "0"},
                                                                  {"1", "0", "0", "0", "-1"}})));
}

inline contact::LapStructure structure_63() {
  const contact::AcStructure ac(matrix_field(r3(), 1, 1, {{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}),
                                geo::TensorField::vector(r3(), exprs({"0", "0", "-1"})),
                                geo::TensorField::one_form(r3(), exprs({"0", "0", "1"})));
  return contact::LapStructure(ac,
                               geo::MetricField(matrix_field(r3(), 0, 2, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}})));
}

inline contact::LapStructure structure_64() {
  const contact::AcStructure ac(matrix_field(r3(), 1, 1, {{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}),
                                geo::TensorField::vector(r3(), exprs({"0", "0", "-1"})),
                                geo::TensorField::one_form(r3(), exprs({"0", "0", "1"})));
  return contact::LapStructure(
      ac, geo::MetricField(matrix_field(r3(), 0, 2, {{"exp(-2*z)", "0", "0"}, {"0", "exp(2*z)", "0"}, {"0", "0", "-1"}})));
}

inline hyp::Immersion immersion(const geo::Chart& ambient, std::vector<std::string> params,
                                const std::vector<std::string>& map, sym::DomainBox box = {}) {
  return hyp::Immersion(geo::Chart(std::move(params), std::move(box)), ambient, exprs(map));
}

inline const geo::CheckEntry& find_entry(const geo::StructureReport& r, std::string_view id) {
  const auto* e = r.find(id);
  if (e == nullptr) throw std::runtime_error("missing entry " + std::string(id));
  return *e;
}

}  // namespace lps::testing
