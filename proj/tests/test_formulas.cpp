#include "doctest.h"

#include <random>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"
#include "eqdef/formulas.hpp"
#include "support.hpp"

using namespace eqdef;
using eqdef::testing::cyclic_cover;
using eqdef::testing::weak_cover;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

CoverPtr unramified(std::uint32_t p, std::int64_t g_y) {
  return std::make_shared<const CoverData>(p, 1, g_y, std::vector<BranchOrbit>{});
}

}  // namespace

TEST_CASE("tame reference value") {
  CHECK(dim_tame(*unramified(5, 2)).value == 3);
  CHECK(dim_tame(*weak_cover(5, 1, 4, 5)).value == 1);
  CHECK(dim_tame(*weak_cover(5, 1, 1, 5, 1)).value == 1);
  CHECK(dim_tame(*weak_cover(5, 1, 4, 5)).formula_id == "tame");
}

TEST_CASE("cyclic coinvariants") {
  const DimensionReport rep = dim_cyclic(*cyclic_cover(5, {{3}}));
  CHECK(rep.value == 3);
  CHECK(rep.formula_id == "cyclic");
  CHECK(rep.orbit_terms == std::vector<std::int64_t>{6});

  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t r = 1; r <= 4; ++r)
      for (std::int64_t g_y = 0; g_y <= 2; ++g_y) {
        const auto c = weak_cover(p, 1, r, p, g_y);
        if (genus_x(*c) < 2) continue;
        const std::int64_t per = p > 3 ? 3 : 2;
        CHECK(dim_cyclic(*c).value == 3 * g_y - 3 + per * static_cast<std::int64_t>(r));
        CHECK(dim_cyclic(*c).value == dim_weakly_ramified(*c).value);
      }

  // p = 2, jumps (1, 3): the per-orbit term is floor(16 / 4) = 4, but
  // g_X = 1 so the formula's genus gate rejects the cover.
  const auto low = cyclic_cover(2, {{1, 3}});
  CHECK(genus_x(*low) == 1);
  CHECK(code_of([&] { dim_cyclic(*low); }) == ErrorCode::GenusTooSmall);
  CHECK(floor_div(2 * low->orbit(0).different(), low->orbit(0).e0()) == 4);

  CHECK(code_of([] { dim_cyclic(*weak_cover(2, 2, 4, 2)); }) == ErrorCode::NotCyclic);
}

TEST_CASE("Hasse-Arf identity right-hand side") {
  CHECK(hasse_arf_identity_rhs(lower_to_upper(std::vector<std::int64_t>{3}, 5), 5) == 6);
  for (std::uint32_t p : {5u, 7u, 11u})
    CHECK(hasse_arf_identity_rhs(lower_to_upper(std::vector<std::int64_t>{1}, p), p) == 3);
  CHECK(hasse_arf_identity_rhs(lower_to_upper(std::vector<std::int64_t>{1, 3}, 2), 2) == 4);
  JumpData bad{{1, 3}, {1, 5}};
  CHECK(code_of([&] { hasse_arf_identity_rhs(bad, 2); }) == ErrorCode::NotHasseArf);
}

TEST_CASE("per-orbit cyclic term equals the Hasse-Arf form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    std::vector<std::int64_t> upper;
    std::int64_t u = 0;
    for (std::size_t t = 0, k = 1 + rng() % 4; t < k; ++t) upper.push_back(u += 1 + rng() % 9);
    const JumpData j = upper_to_lower(upper, p);
    const auto f = RamificationFiltration::from_lower_jumps(p, j.lower);
    CHECK(floor_div(2 * hilbert_different(f), f.e0()) == hasse_arf_identity_rhs(j, p));
  }
}

TEST_CASE("weakly ramified dimension") {
  CHECK(dim_weakly_ramified(*weak_cover(5, 1, 2, 5)).value == 3);
  CHECK(dim_weakly_ramified(*weak_cover(3, 2, 1, 9, 1)).value == 3);
  for (std::size_t r = 3; r <= 6; ++r)
    CHECK(dim_weakly_ramified(*weak_cover(2, 1, r, 2)).value == -3 + 2 * static_cast<std::int64_t>(r));

  const auto c = cyclic_cover(5, {{1}, {3}});
  CHECK(code_of([&] { dim_weakly_ramified(*c); }) == ErrorCode::NotWeaklyRamified);
  CHECK(message_of([&] { dim_weakly_ramified(*c); }).find("G_2 nontrivial") != std::string::npos);
  CHECK(code_of([] { dim_weakly_ramified(*weak_cover(5, 1, 1, 5)); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("free rank of the augmented space") {
  CHECK(free_rank_aug(*weak_cover(5, 1, 2, 5)) == 3);
  CHECK(free_rank_aug(*unramified(5, 1)) == 0);
  CHECK(free_rank_aug(*weak_cover(5, 1, 1, 5)) == 0);
  CHECK(code_of([] { free_rank_aug(*cyclic_cover(5, {{3}})); }) == ErrorCode::NotWeaklyRamified);
}

TEST_CASE("closed-form homology of the skyscraper quotient") {
  const HomologyDims a = homology_dims_closed(*weak_cover(5, 1, 2, 5));
  CHECK(a.h0 == 2);
  CHECK(a.h1 == 2);
  CHECK(a.difference == 0);
  const HomologyDims b = homology_dims_closed(*weak_cover(3, 3, 1, 27));
  CHECK(b.h0 == 1);
  CHECK(b.h1 == 2);
  const HomologyDims c = homology_dims_closed(*weak_cover(2, 2, 2, 4));
  CHECK_FALSE(c.h0.has_value());
  CHECK_FALSE(c.h1.has_value());
  CHECK(c.difference == 0);
  CHECK(homology_dims_closed(*weak_cover(2, 3, 3, 2)).difference == 3);
}

TEST_CASE("free rank of the semisimple part") {
  CHECK(p_rank_free_rank(*cyclic_cover(5, {{3}}), 0, std::nullopt) == 0);
  CHECK(p_rank_free_rank(*weak_cover(5, 1, 3, 5), 0, std::nullopt) == 2);
  CHECK(p_rank_free_rank(*weak_cover(5, 1, 2, 5, 2), 1, 2) == 4);
  CHECK(code_of([] { p_rank_free_rank(*weak_cover(3, 1, 2, 3), 0, std::nullopt); }) ==
        ErrorCode::SmallCharacteristic);
  CHECK(code_of([] { p_rank_free_rank(*unramified(5, 2), 0, 0); }) == ErrorCode::Unramified);
  CHECK(code_of([] { p_rank_free_rank(*weak_cover(5, 1, 2, 5, 2), 1, std::nullopt); }) ==
        ErrorCode::MissingPhi);
  CHECK(code_of([] { p_rank_free_rank(*weak_cover(5, 1, 2, 5, 2), 3, 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { p_rank_free_rank(*weak_cover(5, 1, 2, 5), 0, 1); }) ==
        ErrorCode::InvalidArgument);
  CHECK(coinvariants_from_nilpotent(4, 2) == 6);
  CHECK(nilpotent_free_multiplicity(5, 2) == 3);
}

TEST_CASE("regular multiplicity for order p") {
  CHECK(m_regular_cyclic_p(*cyclic_cover(5, {{3}})) == 1);
  CHECK(m_regular_cyclic_p(*weak_cover(5, 1, 2, 5)) == 1);
  CHECK(m_regular_cyclic_p(*unramified(3, 2)) == 3);
  CHECK(code_of([] { m_regular_cyclic_p(*cyclic_cover(2, {{1, 3}})); }) ==
        ErrorCode::NotCyclicOrderP);

  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::int64_t n = 1; n <= 9; ++n) {
      if (n % p == 0) continue;
      const auto c = cyclic_cover(p, {{n}});
      if (genus_x(*c) < 2) continue;
      CHECK(m_regular_cyclic_p(*c) <= dim_cyclic(*c).value);
    }
}
