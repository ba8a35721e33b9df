#include "lps/geometry/chart.hpp"

#include <algorithm>
#include <set>

namespace lps::geo {

Chart::Chart(std::vector<std::string> coords, sym::DomainBox domain)
    : coords_(std::move(coords)), domain_(std::move(domain)) {
  if (coords_.size() < 2) throw DimensionError("a chart needs at least 2 coordinates");
  std::set<std::string> seen;
  for (const auto& c : coords_) {
    if (c.empty()) throw GeometryError("empty coordinate name");
    if (!seen.insert(c).second) throw GeometryError("duplicate coordinate '" + c + "'");
  }
}

std::size_t Chart::index_of(std::string_view name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  if (it == coords_.end()) throw GeometryError("unknown coordinate '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - coords_.begin());
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (a.coords() != b.coords()) throw ChartMismatch("tensor fields live on different charts");
}

}  // namespace lps::geo
