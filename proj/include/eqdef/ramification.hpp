#pragma once

// Ramification filtrations at a single point.

#include <cstdint>
#include <utility>
#include <vector>

namespace eqdef {

/// One run of equal ramification-group orders: e_i == order for all i up to
/// and including last_index (starting after the previous segment).
struct FiltrationSegment {
  std::int64_t last_index;
  std::int64_t order;
  friend bool operator==(const FiltrationSegment&, const FiltrationSegment&) = default;
};

/// Lower and upper ramification jumps of a cyclic decomposition group of
/// order p^k. Lower jumps i_1 < ... < i_k satisfy
///   i_t = a_0 + p a_1 + ... + p^{t-1} a_{t-1},
/// upper jumps are the partial sums a_0 + ... + a_{t-1}.
struct JumpData {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::size_t k() const noexcept { return lower.size(); }
  /// Highest lower jump (0 when unramified).
  std::int64_t highest_lower() const noexcept { return lower.empty() ? 0 : lower.back(); }
  /// Highest upper jump (0 when unramified).
  std::int64_t highest_upper() const noexcept { return upper.empty() ? 0 : upper.back(); }

  friend bool operator==(const JumpData&, const JumpData&) = default;
};

/// The non-increasing sequence e_0 >= e_1 >= ... of ramification-group
/// orders at a point, stored as segments. Orders past the last segment are 1.
///
/// Construction enforces: every order a power of p, strictly decreasing
/// segment orders, strictly increasing segment ends, and e_0 == e_1.
/// Trailing segments of order 1 are dropped.
class RamificationFiltration {
 public:
  RamificationFiltration(std::uint32_t p, std::vector<FiltrationSegment> segments);

  static RamificationFiltration unramified(std::uint32_t p);
  /// Cyclic filtration of order p^k with the given lower jumps.
  static RamificationFiltration from_lower_jumps(std::uint32_t p,
                                                 const std::vector<std::int64_t>& lower);
  /// e_0 = e_1 = q, e_i = 1 for i >= 2.
  static RamificationFiltration weakly_ramified(std::uint32_t p, std::int64_t q);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<FiltrationSegment>& segments() const noexcept { return segments_; }

  /// e_i; equal to 1 past the last segment.
  std::int64_t order(std::int64_t i) const;
  std::int64_t e0() const { return order(0); }
  /// log_p e_0.
  unsigned log_e0() const;

  /// True when every drop in the sequence is by exactly a factor p, which is
  /// what a cyclic decomposition group forces.
  bool has_cyclic_shape() const;

  /// Lower jumps (with the upper jumps filled in) of a cyclic-shaped
  /// filtration. Throws NotHasseArf when the shape is not cyclic or the
  /// jumps do not follow the Hasse-Arf pattern.
  JumpData jumps() const;

  friend bool operator==(const RamificationFiltration&,
                         const RamificationFiltration&) = default;

 private:
  std::uint32_t p_;
  std::vector<FiltrationSegment> segments_;
};

/// d = sum_{i >= 0} (e_i - 1).
std::int64_t hilbert_different(const RamificationFiltration& f);

/// Fills in upper jumps from lower jumps. Throws NotHasseArf when the
/// increments (i_{t+1} - i_t) / p^t are not positive integers.
JumpData lower_to_upper(const std::vector<std::int64_t>& lower, std::uint32_t p);
JumpData lower_to_upper(const JumpData& j, std::uint32_t p);
/// Inverse of lower_to_upper.
JumpData upper_to_lower(const std::vector<std::int64_t>& upper, std::uint32_t p);

/// d = (1 + M) p^k - (1 + N) with N, M the highest lower and upper jumps.
std::int64_t different_from_jumps(const JumpData& j, std::uint32_t p);

/// True iff e_2 == 1.
bool is_weakly_ramified(const RamificationFiltration& f);

}  // namespace eqdef
