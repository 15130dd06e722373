#include "doctest.h"

#include <random>

#include "eqdef/error.hpp"
#include "eqdef/laurent.hpp"

using namespace eqdef;

namespace {

// Dense reference over F_p: coefficient lists starting at exponent 0.
using Dense = std::vector<std::int64_t>;

Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p, std::size_t n) {
  Dense out(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

LaurentSeries from_dense(const FieldPtr& k, const Dense& d, std::int64_t start, std::int64_t prec) {
  std::vector<std::pair<std::int64_t, FFElem>> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (start + static_cast<std::int64_t>(i) < prec)
      terms.emplace_back(start + static_cast<std::int64_t>(i), k->element(d[i]));
  return LaurentSeries::from_terms(k, terms, prec);
}

Dense random_dense(std::mt19937_64& rng, std::int64_t p, std::size_t n, bool unit) {
  Dense d(n);
  for (auto& c : d) c = static_cast<std::int64_t>(rng() % p);
  if (unit && d[0] == 0) d[0] = 1;
  return d;
}

}  // namespace

TEST_CASE("basic queries") {
  auto k = make_field(5);
  const LaurentSeries a = LaurentSeries::from_terms(k, {{-2, k->element(3)}, {1, k->element(1)}}, 4);
  CHECK(a.valuation() == -2);
  CHECK(a.leading() == k->element(3));
  CHECK(a.coeff(0).is_zero());
  CHECK(a.coeff(-5).is_zero());
  CHECK(a.relative_prec() == 6);
  CHECK_THROWS_AS(a.coeff(4), Error);
  const LaurentSeries z(k, 3);
  CHECK(z.is_zero());
  CHECK_FALSE(z.valuation().has_value());
  CHECK_THROWS_AS(z.require_valuation(), Error);
  // Terms at or beyond prec are dropped.
  CHECK(LaurentSeries::from_terms(k, {{5, k->one()}}, 3).is_zero());
}

TEST_CASE("precision propagation") {
  auto k = make_field(3);
  const LaurentSeries a = LaurentSeries::from_terms(k, {{-1, k->one()}}, 5);
  const LaurentSeries b = LaurentSeries::from_terms(k, {{2, k->one()}}, 7);
  CHECK((a + b).prec() == 5);
  // min(pa + vb, pb + va) = min(7, 6).
  CHECK((a * b).prec() == 6);
  CHECK(a.inverse().prec() == 5 + 2);
  CHECK(a.frobenius().prec() == 15);
  CHECK(b.derivative().prec() == 6);
  CHECK(a.shift(3).prec() == 8);
  const LaurentSeries zero(k, 4);
  CHECK((zero * b).prec() == std::min<std::int64_t>(4 + 2, 7 + 4));
}

TEST_CASE("multiplication matches dense convolution") {
  std::mt19937_64 rng(1);
  for (std::int64_t p : {2, 3, 7}) {
    auto k = make_field(static_cast<std::uint32_t>(p));
    for (int trial = 0; trial < 30; ++trial) {
      const Dense a = random_dense(rng, p, 12, true), b = random_dense(rng, p, 12, true);
      const std::int64_t va = -3, vb = 2;
      const LaurentSeries sa = from_dense(k, a, va, va + 12);
      const LaurentSeries sb = from_dense(k, b, vb, vb + 12);
      const LaurentSeries prod = sa * sb;
      CHECK(prod.prec() == va + vb + 12);
      const Dense ref = dense_mul(a, b, p, 12);
      CHECK(prod.agrees_with(from_dense(k, ref, va + vb, va + vb + 12)));
    }
  }
}

TEST_CASE("inverse and powers") {
  std::mt19937_64 rng(2);
  auto k = make_field(5, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<std::int64_t, FFElem>> terms;
    for (std::int64_t e = -2; e < 8; ++e) terms.emplace_back(e, k->from_code(rng() % 25));
    if (terms[0].second.is_zero()) terms[0].second = k->one();
    const LaurentSeries a = LaurentSeries::from_terms(k, terms, 8);
    const LaurentSeries one = a * a.inverse();
    CHECK(one.valuation() == 0);
    CHECK(one.agrees_with(LaurentSeries::monomial(k->one(), 0, one.prec())));
    CHECK(a.pow(3).agrees_with(a * a * a));
    CHECK(a.pow(-2).agrees_with(a.inverse() * a.inverse()));
    CHECK(a.frobenius().agrees_with(a.pow(5)));
  }
  CHECK_THROWS_AS(LaurentSeries(k, 4).inverse(), Error);
}

TEST_CASE("composition matches term-by-term substitution") {
  std::mt19937_64 rng(4);
  auto k = make_field(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Dense outer = random_dense(rng, 3, 8, false);
    const Dense inner = random_dense(rng, 3, 10, true);
    const LaurentSeries f = from_dense(k, outer, -1, 7);
    const LaurentSeries g = from_dense(k, inner, 1, 11);
    LaurentSeries ref(k, 1000);
    for (std::size_t i = 0; i < outer.size(); ++i) {
      const auto e = static_cast<std::int64_t>(i) - 1;
      if (e >= 7) break;
      ref = ref + g.pow(e).scale(k->element(outer[i]));
    }
    const LaurentSeries got = f.compose(g);
    CHECK(got.agrees_with(ref));
    CHECK(got.prec() >= 6);
  }
}

TEST_CASE("derivative") {
  auto k = make_field(3);
  const LaurentSeries a =
      LaurentSeries::from_terms(k, {{-2, k->one()}, {3, k->one()}, {4, k->element(2)}}, 6);
  // d/ds: -2 s^-3 + 3 s^2 + 8 s^3 = s^-3 + 2 s^3 over F_3.
  const LaurentSeries d = a.derivative();
  CHECK(d.coeff(-3) == k->one());
  CHECK(d.coeff(2).is_zero());
  CHECK(d.coeff(3) == k->element(2));
}
