#pragma once

// JSON encoding of covers, divisors and reports.
//
//   filtration: {"orders": [[i_last, e], ...]}  or  {"lower_jumps": [i_1, ...]}
//   cover:      {"p": 5, "log_order": 1, "genus_quotient": 0,
//                "orbits": [{"filtration": ...}, ...], "cyclic": true}
//   divisor:    {"coeffs": [{"orbit": 0, "n": 12}, {"orbit": "unram:Q", "n": 1}]}
//
// Malformed input throws Error(ParseError).

#include "json.hpp"

#include "eqdef/ascurve.hpp"
#include "eqdef/divisors.hpp"
#include "eqdef/error.hpp"
#include "eqdef/formulas.hpp"
#include "eqdef/homology.hpp"
#include "eqdef/laurent.hpp"

namespace eqdef {

using json = nlohmann::json;

json parse_json_text(const std::string& text);
json read_json_file(const std::string& path);

RamificationFiltration filtration_from_json(const json& j, std::uint32_t p);
json to_json(const RamificationFiltration& f);

CoverPtr cover_from_json(const json& j);
json to_json(const CoverData& c);

OrbitDivisor divisor_from_json(const json& j, const CoverPtr& cover);
json to_json(const OrbitDivisor& d);
json to_json(const QuotientDivisor& d);

json to_json(const DimensionReport& r);
json to_json(const HomologyDims& h);
json to_json(const JordanDecomposition& d);
json to_json(const CrosscheckItem& item);
json to_json(const Error& e);

/// Series as a list of [exponent, code] pairs plus its precision.
json to_json(const LaurentSeries& s);
/// Parses "e:c,e:c,..." with c a field element code.
LaurentSeries series_from_string(const FieldPtr& field, const std::string& text,
                                 std::int64_t prec);

}  // namespace eqdef
