#pragma once

// Global data of a p-group action G on a curve X with quotient Y = X/G.

#include <cstdint>
#include <memory>
#include <vector>

#include "eqdef/ramification.hpp"

namespace eqdef {

/// One G-orbit of ramified points, represented by its filtration.
class BranchOrbit {
 public:
  explicit BranchOrbit(RamificationFiltration filtration);

  const RamificationFiltration& filtration() const noexcept { return filtration_; }
  std::int64_t e0() const noexcept { return e0_; }
  /// Hilbert different d(P).
  std::int64_t different() const noexcept { return d_; }

 private:
  RamificationFiltration filtration_;
  std::int64_t e0_;
  std::int64_t d_;
};

/// (p, |G| = p^n, g_Y, branch orbits). `cyclic` records whether G itself is
/// cyclic; it is inferred as true for |G| <= p.
class CoverData {
 public:
  CoverData(std::uint32_t p, unsigned log_order, std::int64_t genus_quotient,
            std::vector<BranchOrbit> orbits, bool cyclic);
  /// Same, with `cyclic` inferred from |G| <= p.
  CoverData(std::uint32_t p, unsigned log_order, std::int64_t genus_quotient,
            std::vector<BranchOrbit> orbits);

  std::uint32_t p() const noexcept { return p_; }
  unsigned log_order() const noexcept { return n_; }
  std::int64_t group_order() const noexcept { return order_; }
  std::int64_t genus_quotient() const noexcept { return g_y_; }
  bool cyclic() const noexcept { return cyclic_; }
  /// r = number of branch points.
  std::size_t r() const noexcept { return orbits_.size(); }
  const std::vector<BranchOrbit>& orbits() const noexcept { return orbits_; }
  const BranchOrbit& orbit(std::size_t j) const;
  /// |G| / e_0 for branch orbit j.
  std::int64_t orbit_size(std::size_t j) const;

  /// True when every branch orbit has e_2 = 1.
  bool weakly_ramified() const;

 private:
  std::uint32_t p_;
  unsigned n_;
  std::int64_t order_;
  std::int64_t g_y_;
  std::vector<BranchOrbit> orbits_;
  bool cyclic_;
};

using CoverPtr = std::shared_ptr<const CoverData>;

/// 2 g_X - 2 = |G| (2 g_Y - 2) + sum_j orbit_size_j * d_j.
std::int64_t euler_characteristic_x(const CoverData& c);

/// Genus of X by Riemann-Hurwitz; throws NonIntegralGenus when the
/// right-hand side is odd.
std::int64_t genus_x(const CoverData& c);

/// Throws GenusTooSmall unless g_X >= 2.
void require_genus_at_least_two(const CoverData& c);

}  // namespace eqdef
