#include "eqdef/io.hpp"

#include <fstream>
#include <sstream>

namespace eqdef {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, what + ": " + e.what());
  }
}

const json& field_of(const json& j, const char* key) {
  require(j.is_object(), ErrorCode::ParseError, "expected a JSON object");
  require(j.contains(key), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_of(const json& j, const char* key) {
  const json& v = field_of(j, key);
  require(v.is_number_integer(), ErrorCode::ParseError,
          std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json parse_json_text(const std::string& text) {
  return guarded("invalid JSON", [&] { return json::parse(text); });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

RamificationFiltration filtration_from_json(const json& j, std::uint32_t p) {
  return guarded("bad filtration", [&] {
    require(j.is_object(), ErrorCode::ParseError, "filtration must be an object");
    if (j.contains("lower_jumps")) {
      std::vector<std::int64_t> lower = j.at("lower_jumps").get<std::vector<std::int64_t>>();
      return RamificationFiltration::from_lower_jumps(p, lower);
    }
    std::vector<FiltrationSegment> segs;
    for (const auto& seg : field_of(j, "orders")) {
      require(seg.is_array() && seg.size() == 2, ErrorCode::ParseError,
              "filtration segments are [i_last, e] pairs");
      segs.push_back({seg[0].get<std::int64_t>(), seg[1].get<std::int64_t>()});
    }
    return RamificationFiltration(p, std::move(segs));
  });
}

json to_json(const RamificationFiltration& f) {
  json orders = json::array();
  for (const auto& s : f.segments()) orders.push_back({s.last_index, s.order});
  return {{"orders", orders}};
}

CoverPtr cover_from_json(const json& j) {
  return guarded("bad cover", [&] {
    const std::int64_t p = int_of(j, "p");
    const std::int64_t n = int_of(j, "log_order");
    const std::int64_t g = int_of(j, "genus_quotient");
    require(p >= 2 && p < (1 << 20), ErrorCode::ParseError, "p out of range");
    require(n >= 0, ErrorCode::ParseError, "log_order must be non-negative");
    std::vector<BranchOrbit> orbits;
    for (const auto& o : field_of(j, "orbits"))
      orbits.emplace_back(filtration_from_json(field_of(o, "filtration"),
                                               static_cast<std::uint32_t>(p)));
    const auto pp = static_cast<std::uint32_t>(p);
    const auto nn = static_cast<unsigned>(n);
    if (j.contains("cyclic")) {
      require(j.at("cyclic").is_boolean(), ErrorCode::ParseError, "'cyclic' must be boolean");
      return std::make_shared<const CoverData>(pp, nn, g, std::move(orbits),
                                               j.at("cyclic").get<bool>());
    }
    return std::make_shared<const CoverData>(pp, nn, g, std::move(orbits));
  });
}

json to_json(const CoverData& c) {
  json orbits = json::array();
  for (const auto& o : c.orbits()) orbits.push_back({{"filtration", to_json(o.filtration())}});
  return {{"p", c.p()},
          {"log_order", c.log_order()},
          {"genus_quotient", c.genus_quotient()},
          {"orbits", orbits},
          {"cyclic", c.cyclic()}};
}

namespace {

OrbitKey key_from_json(const json& k) {
  if (k.is_number_integer()) {
    const auto idx = k.get<std::int64_t>();
    require(idx >= 0, ErrorCode::ParseError, "orbit index must be non-negative");
    return static_cast<std::size_t>(idx);
  }
  require(k.is_string(), ErrorCode::ParseError, "orbit must be an index or \"unram:<label>\"");
  const std::string s = k.get<std::string>();
  require(s.rfind("unram:", 0) == 0 && s.size() > 6, ErrorCode::ParseError,
          "unramified orbit labels look like \"unram:<label>\"");
  return s.substr(6);
}

json key_to_json(const OrbitKey& k) {
  if (const auto* idx = std::get_if<std::size_t>(&k)) return *idx;
  return to_string(k);
}

}  // namespace

OrbitDivisor divisor_from_json(const json& j, const CoverPtr& cover) {
  return guarded("bad divisor", [&] {
    OrbitDivisor d(cover);
    for (const auto& c : field_of(j, "coeffs")) {
      const OrbitKey key = key_from_json(field_of(c, "orbit"));
      d.set(key, d.coefficient(key) + int_of(c, "n"));
    }
    return d;
  });
}

json to_json(const OrbitDivisor& d) {
  json coeffs = json::array();
  for (const auto& [k, n] : d.coeffs()) coeffs.push_back({{"orbit", key_to_json(k)}, {"n", n}});
  return {{"coeffs", coeffs}};
}

json to_json(const QuotientDivisor& d) {
  json coeffs = json::array();
  for (const auto& [k, n] : d.coeffs()) coeffs.push_back({{"orbit", key_to_json(k)}, {"n", n}});
  return {{"coeffs", coeffs}};
}

json to_json(const DimensionReport& r) {
  return {{"value", r.value},
          {"formula", r.formula_id},
          {"inputs",
           {{"genus_quotient", r.genus_quotient}, {"r", r.r}, {"orbit_terms", r.orbit_terms}}}};
}

json to_json(const HomologyDims& h) {
  json out = {{"difference", h.difference}};
  out["h0"] = h.h0 ? json(*h.h0) : json(nullptr);
  out["h1"] = h.h1 ? json(*h.h1) : json(nullptr);
  return out;
}

json to_json(const JordanDecomposition& d) {
  return {{"dim", d.dim}, {"ranks", d.ranks}, {"m_l", d.multiplicities}, {"tot", d.tot}};
}

json to_json(const CrosscheckItem& item) {
  return {{"name", item.name},
          {"formula", item.formula},
          {"formula_value", item.formula_value},
          {"oracle_value", item.oracle_value},
          {"match", item.match()}};
}

json to_json(const Error& e) {
  return {{"error",
           {{"code", std::string(to_string(e.code()))},
            {"kind", is_precondition(e.code()) ? "precondition" : "validation"},
            {"message", e.what()}}}};
}

json to_json(const LaurentSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({e, c.code()});
  return {{"terms", terms}, {"prec", s.prec()}};
}

LaurentSeries series_from_string(const FieldPtr& field, const std::string& text,
                                 std::int64_t prec) {
  std::vector<std::pair<std::int64_t, FFElem>> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    require(colon != std::string::npos, ErrorCode::ParseError,
            "series terms look like exponent:code, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string es = item.substr(0, colon), cs = item.substr(colon + 1);
      const std::int64_t e = std::stoll(es, &used);
      require(used == es.size(), ErrorCode::ParseError, "bad exponent '" + es + "'");
      const std::uint64_t c = std::stoull(cs, &used);
      require(used == cs.size(), ErrorCode::ParseError, "bad coefficient '" + cs + "'");
      require(c < field->order(), ErrorCode::ParseError,
              "coefficient code " + cs + " is not an element of F_" +
                  std::to_string(field->order()));
      terms.emplace_back(e, field->from_code(c));
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "cannot parse series term '" + item + "'");
    }
  }
  require(!terms.empty(), ErrorCode::ParseError, "empty series");
  return LaurentSeries::from_terms(field, terms, prec);
}

}  // namespace eqdef
