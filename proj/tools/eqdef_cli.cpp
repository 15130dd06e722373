// eqdef: command-line front end. Every subcommand builds a JSON report;
// --format table renders the same report as indented key/value lines.
//
// Exit codes: 0 success, 1 validation error (bad input, failed
// crosscheck), 2 violated hypothesis of the requested formula.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqdef/arith.hpp"
#include "eqdef/ascurve.hpp"
#include "eqdef/canonical.hpp"
#include "eqdef/divisors.hpp"
#include "eqdef/error.hpp"
#include "eqdef/formulas.hpp"
#include "eqdef/homology.hpp"
#include "eqdef/io.hpp"
#include "eqdef/localfield.hpp"

using namespace eqdef;

namespace {

void render_table(const json& j, std::ostream& os, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << indent << k << ":\n";
        render_table(v, os, indent + "  ");
      } else {
        os << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); });
    if (flat) {
      os << indent << j.dump() << "\n";
      return;
    }
    std::size_t i = 0;
    for (const auto& v : j) {
      os << indent << "[" << i++ << "]\n";
      render_table(v, os, indent + "  ");
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "table")
    render_table(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

std::vector<std::uint64_t> parse_codes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      require(used == item.size(), ErrorCode::ParseError, "bad element code '" + item + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad element code '" + item + "'");
    }
  }
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      require(used == item.size(), ErrorCode::ParseError, "bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<FFElem> elements_of(const FieldPtr& k, const std::vector<std::uint64_t>& codes) {
  std::vector<FFElem> out;
  for (auto c : codes) {
    require(c < k->order(), ErrorCode::ParseError,
            "code " + std::to_string(c) + " is not an element of F_" + std::to_string(k->order()));
    out.push_back(k->from_code(c));
  }
  return out;
}

json codes_of(const std::vector<FFElem>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.code());
  return out;
}

FieldPtr field_for(std::int64_t p, std::int64_t m) {
  require(p >= 2 && p < 65536, ErrorCode::InvalidArgument, "p out of range");
  require(m >= 1 && m <= 16, ErrorCode::InvalidArgument, "field degree must be in [1, 16]");
  require(ipow(p, m) <= (std::int64_t{1} << 24), ErrorCode::InvalidArgument,
          "field too large for element enumeration");
  return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
}

// dim ---------------------------------------------------------------------

struct DimArgs {
  std::string which;
  std::string cover_path;
  std::optional<std::int64_t> gamma_y;
  std::optional<std::int64_t> deg_phi_red;
};

json run_dim(const DimArgs& a) {
  const CoverPtr cover = cover_from_json(read_json_file(a.cover_path));
  if (a.which == "tame") return to_json(dim_tame(*cover));
  if (a.which == "cyclic") return to_json(dim_cyclic(*cover));
  if (a.which == "weakly") return to_json(dim_weakly_ramified(*cover));
  if (a.which == "free-rank") return {{"value", free_rank_aug(*cover)}, {"formula", "free_rank_aug"}};
  if (a.which == "homology") {
    json out = to_json(homology_dims_closed(*cover));
    out["formula"] = "homology_closed";
    return out;
  }
  if (a.which == "m-regular")
    return {{"value", m_regular_cyclic_p(*cover)}, {"formula", "m_regular_cyclic_p"}};
  require(a.gamma_y.has_value(), ErrorCode::InvalidArgument, "--case p-rank needs --gamma-y");
  return {{"value", p_rank_free_rank(*cover, *a.gamma_y, a.deg_phi_red)},
          {"formula", "p_rank_free_rank"}};
}

// tot ---------------------------------------------------------------------

json run_tot(const std::string& cover_path, const std::string& divisor_path) {
  const CoverPtr cover = cover_from_json(read_json_file(cover_path));
  const OrbitDivisor d = divisor_from_json(read_json_file(divisor_path), cover);
  const QuotientDivisor closed = floor_pushforward_closed(d);
  const QuotientDivisor iterated = floor_pushforward_iterated(d);
  return {{"value", tot_riemann_roch(d)},
          {"formula", "tot_riemann_roch"},
          {"degree", d.degree()},
          {"genus_x", genus_x(*cover)},
          {"pushforward", to_json(closed)},
          {"routes_agree", closed == iterated}};
}

// homology ----------------------------------------------------------------

struct HomologyArgs {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::optional<std::int64_t> field_degree;
  std::string alpha, beta;
  bool random = false;
  std::optional<std::uint64_t> seed;
  std::string beta_mode = "free";
};

json run_homology(const HomologyArgs& a) {
  require(a.s >= 1 && a.s <= 8, ErrorCode::InvalidArgument, "s must be in [1, 8]");
  std::optional<AlphaBeta> ab;
  if (a.random) {
    require(a.seed.has_value(), ErrorCode::InvalidArgument, "--random needs an explicit --seed");
    require(!a.field_degree, ErrorCode::InvalidArgument,
            "--random draws over F_{p^s}; --m is not accepted");
    const BetaMode mode = a.beta_mode == "square"         ? BetaMode::Square
                          : a.beta_mode == "proportional" ? BetaMode::Proportional
                                                          : BetaMode::Free;
    field_for(a.p, a.s);
    std::mt19937_64 rng(*a.seed);
    ab.emplace(random_alpha_beta(static_cast<std::uint32_t>(a.p), static_cast<std::size_t>(a.s),
                                 mode, rng));
  } else {
    require(!a.alpha.empty() && !a.beta.empty(), ErrorCode::InvalidArgument,
            "give --alpha and --beta, or --random --seed");
    const FieldPtr k = field_for(a.p, a.field_degree.value_or(a.s));
    auto alpha = elements_of(k, parse_codes(a.alpha));
    auto beta = elements_of(k, parse_codes(a.beta));
    require(alpha.size() == static_cast<std::size_t>(a.s) && beta.size() == alpha.size(),
            ErrorCode::InvalidArgument, "--alpha and --beta need exactly s values each");
    ab.emplace(k, std::move(alpha), std::move(beta));
  }
  const HomologyResult h = homology_dims(*ab);
  json out = {{"p", a.p},
              {"s", a.s},
              {"field_order", ab->field->order()},
              {"alpha", codes_of(ab->alpha)},
              {"beta", codes_of(ab->beta)},
              {"alpha_injective", ab->alpha_injective()},
              {"beta_proportional", ab->beta_proportional()},
              {"h0", h.h0},
              {"h1", h.h1}};
  if (ab->alpha_injective()) {
    const ClosedForm cf = closed_form(*ab);
    json closed = {{"difference", cf.difference}};
    closed["h0"] = cf.h0 ? json(*cf.h0) : json(nullptr);
    closed["h1"] = cf.h1 ? json(*cf.h1) : json(nullptr);
    out["closed_form"] = closed;
    out["agree"] = cf.h0 ? (*cf.h0 == h.h0 && *cf.h1 == h.h1) : cf.difference == h.h0 - h.h1;
  }
  return out;
}

// local -------------------------------------------------------------------

struct LocalArgs {
  std::int64_t p = 0;
  std::int64_t m = 1;
  std::string series;
  std::int64_t prec = 0;
  std::optional<std::int64_t> jump_prec;
  std::int64_t n = 1;
  std::string constants;
  std::int64_t tower_prec = 12;
  std::string poles;
  std::int64_t bound = 0;
};

json run_normalize(const LocalArgs& a) {
  const FieldPtr k = field_for(a.p, a.m);
  const NormalizedAS n = as_normalize(series_from_string(k, a.series, a.prec));
  json corr = json::array();
  for (const auto& c : n.corrections)
    corr.push_back({{"coefficient", c.coefficient.code()}, {"exponent", c.exponent}});
  return {{"x", to_json(n.x)}, {"m", n.m}, {"corrections", corr}};
}

json run_jump(const LocalArgs& a) {
  const FieldPtr k = field_for(a.p, a.m);
  const NormalizedAS n = as_normalize(series_from_string(k, a.series, a.prec));
  const ASExtension ext = build_extension(n.x, a.jump_prec.value_or(default_jump_prec(n.m)));
  json jumps = json::array();
  for (std::uint32_t c = 1; c < k->p(); ++c) jumps.push_back(measure_jump(ext, k->element(c)));
  return {{"m", n.m},      {"r", ext.r},           {"l", ext.l},
          {"jump", jumps[0]}, {"jumps_by_shift", jumps}, {"s_of_t", to_json(ext.s_of_t)},
          {"y_of_t", to_json(ext.y_of_t)}};
}

json run_tower(const LocalArgs& a) {
  require(a.p == 2, ErrorCode::InvalidArgument, "towers are built for p = 2");
  require(a.n >= 1 && a.n <= 4, ErrorCode::InvalidArgument, "tower rank must be in [1, 4]");
  const FieldPtr k = field_for(a.p, a.m);
  const auto n = static_cast<std::size_t>(a.n);
  std::vector<FFElem> constants;
  if (!a.constants.empty()) {
    constants = elements_of(k, parse_codes(a.constants));
  } else {
    auto found = find_tower_constants(k, n);
    require(found.has_value(), ErrorCode::FieldTooSmall,
            "no tower constants split over F_" + std::to_string(k->order()));
    constants = *found;
  }
  const Tower tw = build_tower(k, n, constants, a.tower_prec);
  json elems = json::array();
  bool all_square = true, all_mobius = true;
  for (const auto& el : tw.elements) {
    json e = {{"shifts", codes_of(el.shifts)}, {"image", to_json(el.image)}};
    const FFElem a = el.shifts.back();
    if (!a.is_zero()) {
      const AlphaBetaPair ab = extract_alpha_beta(el.image);
      const bool square = ab.beta == ab.alpha * ab.alpha;
      // g(t_n) = 1 / (y_n + b_n) = t_n / (1 + b_n t_n).
      const LaurentSeries t = LaurentSeries::monomial(k->one(), 1, el.image.prec());
      const bool mobius = el.image.agrees_with(t * t.scale(a).plus_constant(k->one()).inverse());
      e["alpha"] = ab.alpha.code();
      e["beta"] = ab.beta.code();
      e["beta_is_alpha_squared"] = square;
      e["mobius"] = mobius;
      all_square = all_square && square;
      all_mobius = all_mobius && mobius;
    }
    elems.push_back(e);
  }
  return {{"n", a.n},
          {"field_order", k->order()},
          {"constants", codes_of(constants)},
          {"prec", tw.prec},
          {"elements", elems},
          {"beta_is_alpha_squared", all_square},
          {"mobius", all_mobius}};
}

json run_weierstrass(const LocalArgs& a) {
  const WeierstrassReport r = weierstrass_check(parse_ints(a.poles), a.bound);
  return {{"pass", r.pass}, {"m", r.m}};
}

// oracle / crosscheck ------------------------------------------------------

json run_oracle(std::int64_t p, std::int64_t m, const std::string& f, const std::string& divisor) {
  const ASCurve curve = ASCurve::parse(field_for(p, m), f);
  const CoverPtr& cover = curve.cover();
  const OrbitDivisor d = curve.named_divisor(divisor);
  const JordanDecomposition jd = curve.decompose(d);
  const std::int64_t g = genus_x(*cover);

  json checks = json::array();
  const auto add = [&](const std::string& name, std::int64_t formula, std::int64_t oracle) {
    checks.push_back(to_json(CrosscheckItem{name, name, formula, oracle}));
  };
  if (d.degree() > 2 * g - 2) add("tot_riemann_roch", tot_riemann_roch(d), jd.tot);
  const OrbitDivisor two_k = curve.canonical_divisor() * 2;
  if (d == two_k) {
    add("dim_cyclic", dim_cyclic(*cover).value, jd.tot);
    add("m_regular_cyclic_p", m_regular_cyclic_p(*cover), jd.multiplicities.back());
    if (cover->weakly_ramified())
      add("dim_weakly_ramified", dim_weakly_ramified(*cover).value, jd.tot);
  }
  if (cover->weakly_ramified() && d == two_k + ramification_divisor(cover).reduced * 3) {
    add("free_rank_aug", free_rank_aug(*cover), jd.multiplicities.back());
    add("non_free_summands", 0, jd.tot - jd.multiplicities.back());
  }

  json points = json::array();
  for (std::size_t j = 0; j < curve.num_ramified(); ++j) {
    const LocalValuations& v = curve.local_valuations(j);
    points.push_back({{"point", curve.point_label(j)},
                      {"pole_order", curve.pole_order(j)},
                      {"v_x", v.v_x},
                      {"v_y", v.v_y},
                      {"v_dx", v.v_dx}});
  }
  json out = {{"p", p},
              {"f", curve.f_string()},
              {"divisor", divisor},
              {"genus", g},
              {"oracle_genus", curve.oracle_genus()},
              {"points", points},
              {"canonical", to_json(curve.canonical_divisor())},
              {"decomposition", to_json(jd)},
              {"crosschecks", checks}};
  return out;
}

int run_crosscheck(std::int64_t p, std::int64_t m, const std::string& f, json& out) {
  const ASCurve curve = ASCurve::parse(field_for(p, m), f);
  json items = json::array();
  bool ok = true;
  for (const auto& item : crosscheck(curve)) {
    items.push_back(to_json(item));
    ok = ok && item.match();
  }
  const std::int64_t g = genus_x(*curve.cover());
  out = {{"p", p}, {"f", curve.f_string()}, {"genus", g}, {"items", items}, {"all_match", ok}};
  if (g < 2) out["skipped"] = "g_X = " + std::to_string(g) + " < 2: only genus and canonical checked";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant deformation dimensions of curves in characteristic p"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Evaluate a closed dimension formula on a cover");
  dim_cmd
      ->add_option("--case", dim.which, "Formula")
      ->required()
      ->check(CLI::IsMember(
          {"tame", "cyclic", "weakly", "free-rank", "homology", "p-rank", "m-regular"}));
  dim_cmd->add_option("cover", dim.cover_path, "Cover JSON file")->required();
  dim_cmd->add_option("--gamma-y", dim.gamma_y, "p-rank of Y (p-rank case)");
  dim_cmd->add_option("--deg-phi-red", dim.deg_phi_red,
                      "deg div(phi)_red of the chosen differential on Y (p-rank case, g_Y >= 1)");

  std::string tot_cover, tot_divisor;
  auto* tot_cmd = app.add_subcommand("tot", "Number of indecomposable summands of H^0(X, O(D))");
  tot_cmd->add_option("cover", tot_cover, "Cover JSON file")->required();
  tot_cmd->add_option("divisor", tot_divisor, "Divisor JSON file")->required();

  HomologyArgs hom;
  auto* hom_cmd = app.add_subcommand("homology", "H_0, H_1 of (Z/p)^s on the three-term module");
  hom_cmd->add_option("--p", hom.p)->required();
  hom_cmd->add_option("--s", hom.s)->required();
  hom_cmd->add_option("--m", hom.field_degree, "Field degree for explicit values (default s)");
  hom_cmd->add_option("--alpha", hom.alpha, "Comma-separated element codes");
  hom_cmd->add_option("--beta", hom.beta, "Comma-separated element codes");
  hom_cmd->add_flag("--random", hom.random, "Draw injective alpha at random");
  hom_cmd->add_option("--seed", hom.seed);
  hom_cmd->add_option("--beta-mode", hom.beta_mode)
      ->check(CLI::IsMember({"free", "proportional", "square"}))
      ->capture_default_str();

  LocalArgs loc;
  auto* local_cmd = app.add_subcommand("local", "Artin-Schreier extensions of k((s))");
  local_cmd->require_subcommand(1);
  local_cmd->fallthrough();
  auto* norm_cmd = local_cmd->add_subcommand("normalize", "Make the pole order prime to p");
  auto* jump_cmd = local_cmd->add_subcommand("jump", "Measure the ramification jump");
  for (auto* c : {norm_cmd, jump_cmd}) {
    c->add_option("--p", loc.p)->required();
    c->add_option("--m", loc.m, "Field degree")->capture_default_str();
    c->add_option("--series", loc.series, "exponent:code pairs, comma-separated")->required();
    c->add_option("--prec", loc.prec, "Absolute precision of the series")->required();
  }
  jump_cmd->add_option("--jump-prec", loc.jump_prec, "Relative precision of s(t), y(t)");
  auto* tower_cmd = local_cmd->add_subcommand("tower", "Weakly ramified p = 2 tower");
  tower_cmd->add_option("--p", loc.p)->required();
  tower_cmd->add_option("--m", loc.m, "Field degree")->capture_default_str();
  tower_cmd->add_option("--n", loc.n, "Tower rank")->capture_default_str();
  tower_cmd->add_option("--constants", loc.constants, "c_1..c_{n-1} as element codes");
  tower_cmd->add_option("--prec", loc.tower_prec)->capture_default_str();
  auto* weier_cmd = local_cmd->add_subcommand("weierstrass", "Smallest odd pole number test");
  weier_cmd->add_option("--poles", loc.poles, "Comma-separated pole numbers")->required();
  weier_cmd->add_option("--bound", loc.bound)->required();

  std::int64_t op = 0, om = 1;
  std::string of, odiv = "2K";
  auto* oracle_cmd = app.add_subcommand("oracle", "Decompose H^0(X, O(D)) on y^p - y = f(x)");
  oracle_cmd->add_option("--p", op)->required();
  oracle_cmd->add_option("--m", om, "Field degree")->capture_default_str();
  oracle_cmd->add_option("--f", of, "Right-hand side, e.g. \"x^3\" or \"x+x^-1\"")->required();
  oracle_cmd->add_option("--divisor", odiv, "Named divisor: 0, K, 2K, 2K+3Rred, 2K+e0, ...")
      ->capture_default_str();

  std::int64_t cp = 0, cm = 1;
  std::string cf;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Every applicable formula against the oracle");
  cross_cmd->add_option("--p", cp)->required();
  cross_cmd->add_option("--m", cm, "Field degree")->capture_default_str();
  cross_cmd->add_option("--f", cf)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    json out;
    int code = 0;
    if (*dim_cmd) out = run_dim(dim);
    else if (*tot_cmd) out = run_tot(tot_cover, tot_divisor);
    else if (*hom_cmd) out = run_homology(hom);
    else if (*norm_cmd) out = run_normalize(loc);
    else if (*jump_cmd) out = run_jump(loc);
    else if (*tower_cmd) out = run_tower(loc);
    else if (*weier_cmd) out = run_weierstrass(loc);
    else if (*oracle_cmd) out = run_oracle(op, om, of, odiv);
    else if (*cross_cmd) code = run_crosscheck(cp, cm, cf, out);
    emit(out, format);
    return code;
  } catch (const Error& e) {
    emit(to_json(e), format);
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return is_precondition(e.code()) ? 2 : 1;
  }
}
