#include "doctest.h"

#include "eqdef/canonical.hpp"
#include "eqdef/error.hpp"
#include "eqdef/io.hpp"
#include "support.hpp"

using namespace eqdef;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("cover JSON round trip") {
  const json j = parse_json_text(R"({"p": 5, "log_order": 1, "genus_quotient": 0,
      "orbits": [{"filtration": {"orders": [[3, 5]]}}]})");
  const CoverPtr c = cover_from_json(j);
  CHECK(c->orbit(0).different() == 16);
  CHECK(c->cyclic());
  const CoverPtr again = cover_from_json(parse_json_text(to_json(*c).dump()));
  CHECK(to_json(*again) == to_json(*c));

  const CoverPtr l = cover_from_json(parse_json_text(R"({"p": 2, "log_order": 2,
      "genus_quotient": 1, "orbits": [{"filtration": {"lower_jumps": [1, 3]}}]})"));
  CHECK(l->orbit(0).e0() == 4);
  CHECK(l->orbit(0).different() == 8);
}

TEST_CASE("malformed input is a parse error") {
  CHECK(code_of([] { parse_json_text("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cover_from_json(parse_json_text(R"({"p": 5})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          cover_from_json(parse_json_text(
              R"({"p": "5", "log_order": 1, "genus_quotient": 0, "orbits": []})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          cover_from_json(parse_json_text(
              R"({"p": 5, "log_order": 1, "genus_quotient": 0, "orbits": [{"filtration": {"orders": [[3]]}}]})"));
        }) == ErrorCode::ParseError);
  // Well-formed but invalid data keeps its own error code.
  CHECK(code_of([] {
          cover_from_json(parse_json_text(
              R"({"p": 5, "log_order": 1, "genus_quotient": 0, "orbits": [{"filtration": {"orders": [[3, 7]]}}]})"));
        }) == ErrorCode::InvalidFiltration);
  CHECK(code_of([] { read_json_file("/nonexistent/cover.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("divisor JSON") {
  const CoverPtr c = eqdef::testing::cyclic_cover(5, {{3}});
  const OrbitDivisor d = divisor_from_json(
      parse_json_text(R"({"coeffs": [{"orbit": 0, "n": 12}, {"orbit": "unram:Q", "n": -1}]})"), c);
  CHECK(d.coefficient(OrbitKey{std::size_t{0}}) == 12);
  CHECK(d.coefficient(OrbitKey{"Q"}) == -1);
  CHECK(divisor_from_json(parse_json_text(to_json(d).dump()), c) == d);
  CHECK(code_of([&] { divisor_from_json(parse_json_text(R"({"coeffs": [{"orbit": "Q", "n": 1}]})"), c); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { divisor_from_json(parse_json_text(R"({"coeffs": [{"orbit": 3, "n": 1}]})"), c); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("series strings") {
  auto k = make_field(3, 2);
  const LaurentSeries s = series_from_string(k, "-2:1,0:5,3:8", 6);
  CHECK(s.valuation() == -2);
  CHECK(s.coeff(0) == k->from_code(5));
  const json j = to_json(s);
  CHECK(j["prec"] == 6);
  CHECK(j["terms"].size() == 3);
  CHECK(code_of([&] { series_from_string(k, "1:9", 4); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { series_from_string(k, "a:1", 4); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { series_from_string(k, "1", 4); }) == ErrorCode::ParseError);
}

TEST_CASE("error payload") {
  const json j = to_json(Error(ErrorCode::NotWeaklyRamified, "G_2 nontrivial at orbit 0"));
  CHECK(j["error"]["code"] == "NotWeaklyRamified");
  CHECK(j["error"]["kind"] == "precondition");
  CHECK(to_json(Error(ErrorCode::ParseError, "x"))["error"]["kind"] == "validation");
}
