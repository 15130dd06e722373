#pragma once

// Cover builders shared by the unit tests and the acceptance suite.

#include <memory>
#include <vector>

#include "eqdef/cover.hpp"
#include "eqdef/divisors.hpp"

namespace eqdef::testing {

inline OrbitKey orbit(std::size_t j) { return OrbitKey{j}; }

/// Order-p^k cyclic cover of a genus-g_Y curve, one orbit per jump list.
inline CoverPtr cyclic_cover(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& jumps,
                             std::int64_t g_y = 0) {
  std::vector<BranchOrbit> orbits;
  unsigned n = 1;
  for (const auto& j : jumps) {
    orbits.emplace_back(RamificationFiltration::from_lower_jumps(p, j));
    n = std::max<unsigned>(n, static_cast<unsigned>(j.size()));
  }
  return std::make_shared<const CoverData>(p, n, g_y, std::move(orbits), true);
}

/// Weakly ramified cover with r orbits of e_0 = q and |G| = p^n; cyclic
/// exactly when n <= 1.
inline CoverPtr weak_cover(std::uint32_t p, unsigned n, std::size_t r, std::int64_t q,
                           std::int64_t g_y = 0) {
  std::vector<BranchOrbit> orbits;
  for (std::size_t j = 0; j < r; ++j)
    orbits.emplace_back(RamificationFiltration::weakly_ramified(p, q));
  return std::make_shared<const CoverData>(p, n, g_y, std::move(orbits));
}

}  // namespace eqdef::testing
