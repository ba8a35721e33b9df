#include "lps/symexpr/sample.hpp"

#include <cmath>

namespace lps::sym {

namespace {

void check_interval(const std::string& name, Interval iv) {
  if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo < iv.hi)) {
    throw std::invalid_argument("empty sampling interval for '" + name + "'");
  }
}

}  // namespace

DomainBox::DomainBox(std::map<std::string, Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& [name, iv] : intervals_) check_interval(name, iv);
}

void DomainBox::set(const std::string& name, Interval interval) {
  check_interval(name, interval);
  intervals_[name] = interval;
}

Interval DomainBox::interval(const std::string& name) const {
  auto it = intervals_.find(name);
  return it == intervals_.end() ? Interval{} : it->second;
}

SamplePoint Sampler::draw(const DomainBox& box, std::span<const std::string> coords) {
  SamplePoint p;
  for (const auto& c : coords) {
    const Interval iv = box.interval(c);
    // Open interval: stay a small margin away from both ends.
    const double margin = 1e-6 * (iv.hi - iv.lo);
    std::uniform_real_distribution<double> dist(iv.lo + margin, iv.hi - margin);
    p.set(c, dist(rng_));
  }
  return p;
}

std::vector<SamplePoint> Sampler::draw_valid(const DomainBox& box,
                                             std::span<const std::string> coords,
                                             std::span<const Expr> exprs, int count,
                                             int max_attempts) {
  if (max_attempts <= 0) max_attempts = 50 * std::max(count, 1);
  std::vector<SamplePoint> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (attempts++ >= max_attempts) {
      throw DomainError("could not draw " + std::to_string(count) +
                        " valid sample points within " + std::to_string(max_attempts) +
                        " attempts");
    }
    SamplePoint p = draw(box, coords);
    try {
      for (const auto& e : exprs) (void)eval(e, p);
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lps::sym
