#include "eqdef/cover.hpp"

#include <algorithm>
#include <string>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"

namespace eqdef {

BranchOrbit::BranchOrbit(RamificationFiltration filtration)
    : filtration_(std::move(filtration)),
      e0_(filtration_.e0()),
      d_(hilbert_different(filtration_)) {}

CoverData::CoverData(std::uint32_t p, unsigned log_order, std::int64_t genus_quotient,
                     std::vector<BranchOrbit> orbits, bool cyclic)
    : p_(p), n_(log_order), order_(0), g_y_(genus_quotient),
      orbits_(std::move(orbits)), cyclic_(cyclic) {
  require(is_prime(p), ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
  require(log_order <= 40, ErrorCode::InvalidArgument, "group order too large");
  order_ = ipow(p, log_order);
  require(g_y_ >= 0, ErrorCode::InvalidArgument, "quotient genus must be non-negative");
  require(!(log_order <= 1 && !cyclic), ErrorCode::InvalidArgument,
          "a group of order at most p is cyclic");
  for (std::size_t j = 0; j < orbits_.size(); ++j) {
    const auto& o = orbits_[j];
    require(o.filtration().p() == p, ErrorCode::InvalidFiltration,
            "orbit " + std::to_string(j) + " filtration has a different p");
    require(o.e0() > 1, ErrorCode::InvalidFiltration,
            "orbit " + std::to_string(j) + " is listed as a branch orbit but is unramified");
    require(order_ % o.e0() == 0, ErrorCode::InvalidFiltration,
            "e_0 of orbit " + std::to_string(j) + " does not divide |G|");
    if (cyclic_) {
      require(o.filtration().has_cyclic_shape(), ErrorCode::InvalidFiltration,
              "G is cyclic but orbit " + std::to_string(j) +
                  " has a non-cyclic filtration");
      try {
        (void)o.filtration().jumps();
      } catch (const Error& e) {
        fail(ErrorCode::InvalidFiltration,
             "G is cyclic but orbit " + std::to_string(j) + ": " + e.what());
      }
    }
  }
}

CoverData::CoverData(std::uint32_t p, unsigned log_order, std::int64_t genus_quotient,
                     std::vector<BranchOrbit> orbits)
    : CoverData(p, log_order, genus_quotient, std::move(orbits), log_order <= 1) {}

const BranchOrbit& CoverData::orbit(std::size_t j) const {
  require(j < orbits_.size(), ErrorCode::InvalidArgument,
          "orbit index " + std::to_string(j) + " out of range");
  return orbits_[j];
}

std::int64_t CoverData::orbit_size(std::size_t j) const { return order_ / orbit(j).e0(); }

bool CoverData::weakly_ramified() const {
  return std::all_of(orbits_.begin(), orbits_.end(), [](const BranchOrbit& o) {
    return is_weakly_ramified(o.filtration());
  });
}

std::int64_t euler_characteristic_x(const CoverData& c) {
  std::int64_t chi = c.group_order() * (2 * c.genus_quotient() - 2);
  for (std::size_t j = 0; j < c.r(); ++j) chi += c.orbit_size(j) * c.orbit(j).different();
  return chi;
}

std::int64_t genus_x(const CoverData& c) {
  const std::int64_t chi = euler_characteristic_x(c);
  require(mod_floor(chi, 2) == 0, ErrorCode::NonIntegralGenus,
          "Riemann-Hurwitz gives odd 2g_X - 2 = " + std::to_string(chi));
  const std::int64_t g = chi / 2 + 1;
  require(g >= 0, ErrorCode::NonIntegralGenus,
          "Riemann-Hurwitz gives negative genus " + std::to_string(g));
  return g;
}

void require_genus_at_least_two(const CoverData& c) {
  const std::int64_t g = genus_x(c);
  require(g >= 2, ErrorCode::GenusTooSmall,
          "g_X = " + std::to_string(g) + " but the formula assumes g_X >= 2");
}

}  // namespace eqdef
