#include "doctest.h"

#include <random>

#include "eqdef/error.hpp"
#include "eqdef/homology.hpp"

using namespace eqdef;

namespace {

AlphaBeta make_ab(std::uint32_t p, unsigned m, const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b) {
  auto k = make_field(p, m);
  std::vector<FFElem> av, bv;
  for (auto c : a) av.push_back(k->from_code(c));
  for (auto c : b) bv.push_back(k->from_code(c));
  return AlphaBeta(k, av, bv);
}

std::vector<FFElem> squares(const std::vector<FFElem>& v) {
  std::vector<FFElem> out;
  for (const auto& x : v) out.push_back(x * x);
  return out;
}

}  // namespace

TEST_CASE("complex for p = 2, s = 1") {
  const AlphaBeta ab = make_ab(2, 1, {1}, {1});
  const ChainComplex cx = build_complex(ab);
  CHECK(cx.d1.rows() == 3);
  CHECK(cx.d1.cols() == 3);
  CHECK(matrix_rank(cx.d1) == 1);
  // g - 1 sends w3 to w2 + w1 and kills w2 (2a = 0).
  CHECK(cx.d1(0, 2).is_one());
  CHECK(cx.d1(1, 2).is_one());
  CHECK(cx.d1(0, 1).is_zero());
}

TEST_CASE("trivial action gives zero differentials") {
  for (std::size_t s = 1; s <= 3; ++s) {
    const AlphaBeta ab = make_ab(5, 1, std::vector<std::uint64_t>(s, 0),
                                 std::vector<std::uint64_t>(s, 0));
    const ChainComplex cx = build_complex(ab);
    CHECK(cx.d1.is_zero());
    CHECK(cx.d2.is_zero());
    const HomologyResult h = homology_dims(ab);
    CHECK(h.h0 == 3);
    CHECK(h.h1 == static_cast<std::int64_t>(3 * s));
    CHECK_FALSE(ab.alpha_injective());
    CHECK_THROWS_AS(closed_form(ab), Error);
  }
}

TEST_CASE("mixed block of d2 for s = 2") {
  const AlphaBeta ab = make_ab(5, 2, {1, 5}, {2, 3});
  const ChainComplex cx = build_complex(ab);
  REQUIRE(cx.d2.rows() == 6);
  REQUIRE(cx.d2.cols() == 9);
  const FFMatrix g1 = action_matrix(ab.alpha[0], ab.beta[0]);
  const FFMatrix g2 = action_matrix(ab.alpha[1], ab.beta[1]);
  const auto k = ab.field;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const FFElem id = i == j ? k->one() : k->zero();
      CHECK(cx.d2(i, 6 + j) == g2(i, j) - id);
      CHECK(cx.d2(3 + i, 6 + j) == id - g1(i, j));
    }
}

TEST_CASE("d1 d2 = 0") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t s = 1; s <= 3; ++s) {
      const AlphaBeta ab = random_alpha_beta(p, s, BetaMode::Free, rng);
      const ChainComplex cx = build_complex(ab);
      CHECK((cx.d1 * cx.d2).is_zero());
    }
}

TEST_CASE("evaluate is a homomorphism into the matrix group") {
  const AlphaBeta ab = make_ab(3, 2, {1, 3}, {4, 7});
  const auto act = [&](const std::vector<std::uint32_t>& e) {
    const auto [a, b] = ab.evaluate(e);
    return action_matrix(a, b);
  };
  const FFMatrix g1 = action_matrix(ab.alpha[0], ab.beta[0]);
  const FFMatrix g2 = action_matrix(ab.alpha[1], ab.beta[1]);
  CHECK(act({1, 0}) == g1);
  CHECK(act({2, 1}) == g1 * g1 * g2);
  CHECK(act({3, 0}) == FFMatrix::identity(ab.field, 3));
  CHECK(act({1, 2}) == g2 * g1 * g2);
}

TEST_CASE("homology examples") {
  const HomologyResult a = homology_dims(make_ab(5, 1, {1}, {0}));
  CHECK(a.h0 == 1);
  CHECK(a.h1 == 1);
  const HomologyResult b = homology_dims(make_ab(3, 2, {1, 3}, {0, 5}));
  CHECK(b.h0 == 1);
  CHECK(b.h1 == 1);

  auto k4 = make_field(2, 2);
  std::vector<FFElem> alpha{k4->one(), k4->generator()};
  const AlphaBeta sq(k4, alpha, squares(alpha));
  CHECK_FALSE(sq.beta_proportional());
  const HomologyResult c = homology_dims(sq);
  CHECK(c.h0 - c.h1 == 0);
}

TEST_CASE("closed forms") {
  const ClosedForm a = closed_form(make_ab(7, 3, {1, 7, 49}, {0, 0, 0}));
  CHECK(a.h0 == 1);
  CHECK(a.h1 == 3);
  const ClosedForm b = closed_form(make_ab(2, 1, {1}, {1}));
  CHECK(b.difference == 1);
  CHECK_FALSE(b.h0.has_value());

  auto k8 = make_field(2, 3);
  const FFElem w = k8->generator();
  std::vector<FFElem> alpha{k8->one(), w, w * w};
  const AlphaBeta sq(k8, alpha, squares(alpha));
  CHECK(closed_form(sq).difference == -1);
  CHECK(homology_dims(sq).h0 - homology_dims(sq).h1 == -1);
}

TEST_CASE("random draws respect the requested branch") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const AlphaBeta prop = random_alpha_beta(2, 3, BetaMode::Proportional, rng);
    CHECK(prop.alpha_injective());
    CHECK(prop.beta_proportional());
    const AlphaBeta sq = random_alpha_beta(2, 2, BetaMode::Square, rng);
    CHECK(sq.beta[1] == sq.alpha[1] * sq.alpha[1]);
  }
}
