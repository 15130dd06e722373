#include "eqdef/formulas.hpp"

#include <string>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"

namespace eqdef {

namespace {

DimensionReport start_report(const CoverData& c, std::string id) {
  DimensionReport rep;
  rep.formula_id = std::move(id);
  rep.genus_quotient = c.genus_quotient();
  rep.r = c.r();
  return rep;
}

// Dimensions are non-negative whenever the formula applies and g_X >= 2.
void check_nonnegative(const CoverData& c, const DimensionReport& rep) {
  std::int64_t g = 0;
  try {
    g = genus_x(c);
  } catch (const Error&) {
    return;
  }
  if (g >= 2)
    require(rep.value >= 0, ErrorCode::ConsistencyError,
            "formula '" + rep.formula_id + "' produced negative dimension " +
                std::to_string(rep.value));
}

void require_weakly_ramified(const CoverData& c) {
  for (std::size_t j = 0; j < c.r(); ++j)
    require(is_weakly_ramified(c.orbit(j).filtration()), ErrorCode::NotWeaklyRamified,
            "G_2 nontrivial at orbit " + std::to_string(j) + " (e_2 = " +
                std::to_string(c.orbit(j).filtration().order(2)) + ")");
}

}  // namespace

DimensionReport dim_tame(const CoverData& c) {
  DimensionReport rep = start_report(c, "tame");
  rep.orbit_terms.assign(c.r(), 1);
  rep.value = 3 * c.genus_quotient() - 3 + static_cast<std::int64_t>(c.r());
  check_nonnegative(c, rep);
  return rep;
}

DimensionReport dim_cyclic(const CoverData& c) {
  require(c.cyclic(), ErrorCode::NotCyclic, "formula needs a cyclic group G");
  require_genus_at_least_two(c);
  DimensionReport rep = start_report(c, "cyclic");
  rep.value = 3 * c.genus_quotient() - 3;
  for (const auto& o : c.orbits()) {
    const std::int64_t term = floor_div(2 * o.different(), o.e0());
    rep.orbit_terms.push_back(term);
    rep.value += term;
  }
  check_nonnegative(c, rep);
  return rep;
}

std::int64_t hasse_arf_identity_rhs(const JumpData& j, std::uint32_t p) {
  // Validates the Hasse-Arf pattern and that upper jumps match.
  const JumpData checked = lower_to_upper(j.lower, p);
  require(checked.upper == j.upper, ErrorCode::NotHasseArf,
          "upper jumps are inconsistent with the lower jumps");
  const std::int64_t e0 = ipow(p, static_cast<unsigned>(j.k()));
  return 2 * (1 + j.highest_upper()) + floor_div(-2 * (1 + j.highest_lower()), e0);
}

DimensionReport dim_weakly_ramified(const CoverData& c) {
  require_weakly_ramified(c);
  require_genus_at_least_two(c);
  DimensionReport rep = start_report(c, "weakly");
  const std::int64_t r = static_cast<std::int64_t>(c.r());
  rep.value = 3 * c.genus_quotient() - 3 + (c.p() > 3 ? 2 * r : r);
  for (const auto& o : c.orbits()) {
    const std::int64_t term = o.filtration().log_e0();
    rep.orbit_terms.push_back(term);
    rep.value += term;
  }
  check_nonnegative(c, rep);
  return rep;
}

std::int64_t free_rank_aug(const CoverData& c) {
  require_weakly_ramified(c);
  return 3 * (c.genus_quotient() - 1 + static_cast<std::int64_t>(c.r()));
}

HomologyDims homology_dims_closed(const CoverData& c) {
  require_weakly_ramified(c);
  const std::int64_t r = static_cast<std::int64_t>(c.r());
  std::int64_t log_sum = 0;
  for (const auto& o : c.orbits()) log_sum += o.filtration().log_e0();
  HomologyDims h;
  if (c.p() > 3) {
    h.h0 = r;
    h.h1 = log_sum;
  } else if (c.p() == 3) {
    h.h0 = r;
    h.h1 = log_sum - r;
  }
  h.difference = h.h0 ? *h.h0 - *h.h1 : 2 * r - log_sum;
  return h;
}

std::int64_t p_rank_free_rank(const CoverData& c, std::int64_t gamma_y,
                              std::optional<std::int64_t> deg_phi_red) {
  require(c.p() > 3, ErrorCode::SmallCharacteristic,
          "p-rank representation formula assumes p > 3");
  require(c.r() >= 1, ErrorCode::Unramified, "p-rank representation formula assumes pi ramified");
  require(gamma_y >= 0 && gamma_y <= c.genus_quotient(), ErrorCode::InvalidArgument,
          "p-rank of Y must lie in [0, g_Y]");
  const std::int64_t base = gamma_y - 1 + static_cast<std::int64_t>(c.r());
  if (c.genus_quotient() == 0) {
    require(!deg_phi_red.has_value(), ErrorCode::InvalidArgument,
            "deg(div(phi)_red) is only used when g_Y >= 1");
    return base;
  }
  require(deg_phi_red.has_value(), ErrorCode::MissingPhi,
          "g_Y >= 1 needs deg(div(phi)_red)");
  require(*deg_phi_red >= 0 && *deg_phi_red <= 2 * c.genus_quotient() - 2,
          ErrorCode::InvalidArgument, "deg(div(phi)_red) must lie in [0, 2g_Y - 2]");
  return base + *deg_phi_red;
}

std::int64_t coinvariants_from_nilpotent(std::int64_t nilpotent_coinvariants,
                                         std::int64_t borne_invariant) {
  return nilpotent_coinvariants + borne_invariant;
}

std::int64_t nilpotent_free_multiplicity(std::int64_t regular_multiplicity,
                                         std::int64_t borne_invariant) {
  return regular_multiplicity - borne_invariant;
}

std::int64_t m_regular_cyclic_p(const CoverData& c) {
  require(c.log_order() == 1, ErrorCode::NotCyclicOrderP,
          "formula needs G cyclic of order exactly p (|G| = " +
              std::to_string(c.group_order()) + ")");
  const std::int64_t p = c.p();
  std::int64_t m = 3 * c.genus_quotient() - 3;
  for (const auto& o : c.orbits()) {
    const std::int64_t n = o.filtration().jumps().highest_lower();
    m += floor_div((n + 2) * (p - 1), p);
  }
  return m;
}

}  // namespace eqdef
