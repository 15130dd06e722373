#include "doctest.h"

#include <random>

#include "eqdef/error.hpp"
#include "eqdef/localfield.hpp"

using namespace eqdef;

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

LaurentSeries mono(const FieldPtr& k, std::int64_t c, std::int64_t e, std::int64_t prec) {
  return LaurentSeries::monomial(k->element(c), e, prec);
}

std::vector<std::int64_t> range_from(std::vector<std::int64_t> head, std::int64_t from,
                                     std::int64_t to) {
  for (std::int64_t m = from; m <= to; ++m) head.push_back(m);
  return head;
}

}  // namespace

TEST_CASE("normalization examples") {
  auto k2 = make_field(2);
  const NormalizedAS a = as_normalize(mono(k2, 1, -2, 10));
  CHECK(a.m == 1);
  CHECK(a.x.agrees_with(mono(k2, 1, -1, 10)));
  REQUIRE(a.corrections.size() == 1);
  CHECK(a.corrections[0].exponent == -1);

  const NormalizedAS b = as_normalize(mono(k2, 1, -4, 10) + mono(k2, 1, -3, 10));
  CHECK(b.m == 3);
  CHECK(b.x.agrees_with(mono(k2, 1, -3, 10) + mono(k2, 1, -2, 10)));

  auto k5 = make_field(5);
  const NormalizedAS c = as_normalize(mono(k5, 1, -3, 10));
  CHECK(c.m == 3);
  CHECK(c.corrections.empty());

  CHECK(code_of([&] { as_normalize(mono(k5, 1, 2, 10)); }) == ErrorCode::NonNegativeValuation);
  CHECK(as_normalize(mono(k5, 1, -5, 10)).m == 1);
  // s^-5 - s^-1 is v^5 - v for v = s^-1.
  CHECK(code_of([&] { as_normalize(mono(k5, 1, -5, 10) - mono(k5, 1, -1, 10)); }) ==
        ErrorCode::NonNegativeValuation);
  CHECK(code_of([&] { as_normalize(LaurentSeries(k5, -2)); }) == ErrorCode::PrecisionExhausted);
}

TEST_CASE("normalization in a non-prime field uses p-th roots") {
  auto k = make_field(3, 2);
  const FFElem w = k->generator();
  const LaurentSeries x = LaurentSeries::monomial(w, -6, 8) + LaurentSeries::monomial(k->one(), -1, 8);
  const NormalizedAS n = as_normalize(x);
  CHECK(n.m == 2);
  // x - n.x = sum (v^p - v) over the corrections.
  LaurentSeries diff = x - n.x;
  for (const auto& c : n.corrections) {
    const LaurentSeries v = LaurentSeries::monomial(c.coefficient, c.exponent, 8);
    diff = diff - (v.frobenius() - v);
  }
  CHECK(diff.is_zero());
}

TEST_CASE("extension valuations and relations") {
  auto k2 = make_field(2);
  const ASExtension e = build_extension(mono(k2, 1, -1, 20), 10);
  CHECK(e.m == 1);
  CHECK((e.r * 2 + e.l * 1) == 1);
  CHECK(e.y_of_t.valuation() == -1);
  CHECK(e.s_of_t.valuation() == 2);

  auto k5 = make_field(5);
  const LaurentSeries x5 = mono(k5, 1, -3, 30);
  const ASExtension f = build_extension(x5, 10);
  CHECK(f.s_of_t.valuation() == 5);
  CHECK(f.y_of_t.valuation() == -3);
  // Independent residual checks: y^5 - y = x(s) and t = s^r y^{-l}.
  const LaurentSeries y = f.y_of_t;
  const LaurentSeries rel = y.pow(5) - y - x5.compose(f.s_of_t);
  CHECK(rel.is_zero());
  CHECK(rel.prec() >= -15 + 10);
  const LaurentSeries t = f.s_of_t.pow(f.r) * y.pow(-f.l);
  CHECK(t.agrees_with(mono(k5, 1, 1, t.prec())));
  CHECK(t.prec() >= 11);

  CHECK(code_of([&] { build_extension(mono(k5, 1, 2, 10), 5); }) == ErrorCode::NonNegativeValuation);
  CHECK(code_of([&] { build_extension(mono(k5, 1, -5, 10), 5); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { build_extension(mono(k5, 1, -3, -1), 10); }) == ErrorCode::PrecisionExhausted);
}

TEST_CASE("jump equals the pole order") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{2, 1}, {5, 3}, {2, 3}}) {
    auto k = make_field(p);
    const ASExtension e = build_extension(mono(k, 1, -m, 60), default_jump_prec(m));
    CHECK(measure_jump(e, k->one()) == m);
  }
  auto k5 = make_field(5);
  const ASExtension e = build_extension(mono(k5, 1, -3, 60), 14);
  CHECK(code_of([&] { measure_jump(e, k5->zero()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reading alpha and beta") {
  auto k = make_field(2, 2);
  const FFElem a = k->generator();
  const LaurentSeries t = LaurentSeries::monomial(k->one(), 1, 14);
  const LaurentSeries gt = t * t.scale(a).plus_constant(k->one()).inverse();
  const AlphaBetaPair ab = extract_alpha_beta(gt);
  CHECK(ab.alpha == a);
  CHECK(ab.beta == a * a);
  const AlphaBetaPair id = extract_alpha_beta(t);
  CHECK(id.alpha.is_zero());
  CHECK(id.beta.is_zero());
  const AlphaBetaPair cube = extract_alpha_beta(t + t.pow(3));
  CHECK(cube.alpha.is_zero());
  CHECK(cube.beta.is_one());
  CHECK(code_of([&] { extract_alpha_beta(t.pow(2)); }) == ErrorCode::NotWeaklyRamifiedAction);
}

TEST_CASE("rank-one tower") {
  auto k = make_field(2);
  const Tower tw = build_tower(k, 1, {}, 14);
  REQUIRE(tw.elements.size() == 2);
  const LaurentSeries t = LaurentSeries::monomial(k->one(), 1, 15);
  for (const auto& el : tw.elements) {
    if (el.shifts[0].is_zero()) {
      CHECK(el.image.agrees_with(t));
    } else {
      const LaurentSeries mob = t * t.scale(el.shifts[0]).plus_constant(k->one()).inverse();
      CHECK(el.image.agrees_with(mob));
      CHECK(el.image.prec() >= 13);
    }
  }
}

TEST_CASE("rank-two tower has beta = alpha^2") {
  auto k = make_field(2, 2);
  const auto constants = find_tower_constants(k, 2);
  REQUIRE(constants.has_value());
  const Tower tw = build_tower(k, 2, *constants, 14);
  CHECK(tw.elements.size() == 4);
  for (const auto& el : tw.elements) {
    const AlphaBetaPair ab = extract_alpha_beta(el.image);
    CHECK(ab.beta == ab.alpha * ab.alpha);
  }
  // Composition of two elements is the element with added shifts.
  const auto& g = tw.elements[1];
  const auto& h = tw.elements[2];
  const LaurentSeries gh = compose_actions(g.image, h.image);
  bool found = false;
  for (const auto& el : tw.elements)
    if (el.shifts[0] == g.shifts[0] + h.shifts[0] && el.shifts[1] == g.shifts[1] + h.shifts[1])
      found = el.image.agrees_with(gh);
  CHECK(found);
}

TEST_CASE("tower over a too-small field") {
  auto k = make_field(2, 1);
  CHECK_FALSE(find_tower_constants(k, 2).has_value());
  CHECK(code_of([&] { build_tower(k, 2, {k->one()}, 10); }) == ErrorCode::FieldTooSmall);
}

TEST_CASE("smallest odd pole number") {
  const WeierstrassReport a = weierstrass_check(range_from({0, 4, 6, 8}, 9, 20), 20);
  CHECK(a.pass);
  CHECK(a.m == 9);
  const WeierstrassReport b = weierstrass_check(range_from({0, 2, 4}, 7, 20), 20);
  CHECK_FALSE(b.pass);
  CHECK(b.m == 7);
  const WeierstrassReport c = weierstrass_check(range_from({0}, 4, 20), 20);
  CHECK(c.pass);
  CHECK(c.m == 5);
  CHECK(code_of([] { weierstrass_check({0, 2, 4, 6}, 6); }) == ErrorCode::NoOddPoleNumber);
}
