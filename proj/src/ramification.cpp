#include "eqdef/ramification.hpp"

#include <string>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"

namespace eqdef {

RamificationFiltration::RamificationFiltration(std::uint32_t p,
                                               std::vector<FiltrationSegment> segments)
    : p_(p) {
  require(is_prime(p), ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
  while (!segments.empty() && segments.back().order == 1) segments.pop_back();
  std::int64_t prev_end = -1;
  std::int64_t prev_order = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    require(s.order >= 1 && exact_log(s.order, p).has_value(),
            ErrorCode::InvalidFiltration,
            "ramification order " + std::to_string(s.order) + " is not a power of " +
                std::to_string(p));
    require(s.order > 1, ErrorCode::InvalidFiltration,
            "order-1 segment before the end of the filtration");
    require(s.last_index > prev_end, ErrorCode::InvalidFiltration,
            "segment ends must be strictly increasing");
    require(i == 0 || s.order < prev_order, ErrorCode::InvalidFiltration,
            "ramification orders must be strictly decreasing across segments");
    prev_end = s.last_index;
    prev_order = s.order;
  }
  require(segments.empty() || segments.front().last_index >= 1,
          ErrorCode::InvalidFiltration, "e_0 must equal e_1 for a p-group");
  segments_ = std::move(segments);
}

RamificationFiltration RamificationFiltration::unramified(std::uint32_t p) {
  return RamificationFiltration(p, {});
}

RamificationFiltration RamificationFiltration::from_lower_jumps(
    std::uint32_t p, const std::vector<std::int64_t>& lower) {
  std::vector<FiltrationSegment> segs;
  const std::int64_t k = static_cast<std::int64_t>(lower.size());
  for (std::int64_t t = 0; t < k; ++t)
    segs.push_back({lower[t], ipow(p, static_cast<unsigned>(k - t))});
  return RamificationFiltration(p, std::move(segs));
}

RamificationFiltration RamificationFiltration::weakly_ramified(std::uint32_t p,
                                                               std::int64_t q) {
  if (q == 1) return unramified(p);
  return RamificationFiltration(p, {{1, q}});
}

std::int64_t RamificationFiltration::order(std::int64_t i) const {
  for (const auto& s : segments_)
    if (i <= s.last_index) return s.order;
  return 1;
}

unsigned RamificationFiltration::log_e0() const { return *exact_log(e0(), p_); }

bool RamificationFiltration::has_cyclic_shape() const {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const std::int64_t next = i + 1 < segments_.size() ? segments_[i + 1].order : 1;
    if (segments_[i].order != next * p_) return false;
  }
  return true;
}

JumpData RamificationFiltration::jumps() const {
  require(has_cyclic_shape(), ErrorCode::NotHasseArf,
          "filtration does not drop by a factor p at every jump (not cyclic)");
  std::vector<std::int64_t> lower;
  for (const auto& s : segments_) lower.push_back(s.last_index);
  return lower_to_upper(lower, p_);
}

std::int64_t hilbert_different(const RamificationFiltration& f) {
  std::int64_t d = 0;
  std::int64_t prev_end = -1;
  for (const auto& s : f.segments()) {
    d += (s.last_index - prev_end) * (s.order - 1);
    prev_end = s.last_index;
  }
  return d;
}

JumpData lower_to_upper(const std::vector<std::int64_t>& lower, std::uint32_t p) {
  JumpData j;
  j.lower = lower;
  std::int64_t upper = 0;
  std::int64_t prev = 0;
  std::int64_t scale = 1;
  for (std::size_t t = 0; t < lower.size(); ++t) {
    const std::int64_t diff = lower[t] - prev;
    require(diff > 0 && diff % scale == 0, ErrorCode::NotHasseArf,
            "lower jump " + std::to_string(lower[t]) +
                " does not follow the Hasse-Arf pattern");
    upper += diff / scale;
    j.upper.push_back(upper);
    prev = lower[t];
    scale *= p;
  }
  return j;
}

JumpData lower_to_upper(const JumpData& j, std::uint32_t p) { return lower_to_upper(j.lower, p); }

JumpData upper_to_lower(const std::vector<std::int64_t>& upper, std::uint32_t p) {
  JumpData j;
  j.upper = upper;
  std::int64_t lower = 0;
  std::int64_t prev = 0;
  std::int64_t scale = 1;
  for (std::int64_t u : upper) {
    const std::int64_t a = u - prev;
    require(a > 0, ErrorCode::NotHasseArf, "upper jumps must be strictly increasing and positive");
    lower += scale * a;
    j.lower.push_back(lower);
    prev = u;
    scale *= p;
  }
  return j;
}

std::int64_t different_from_jumps(const JumpData& j, std::uint32_t p) {
  const std::int64_t pk = ipow(p, static_cast<unsigned>(j.k()));
  return (1 + j.highest_upper()) * pk - (1 + j.highest_lower());
}

bool is_weakly_ramified(const RamificationFiltration& f) { return f.order(2) == 1; }

}  // namespace eqdef
