#include "eqdef/ascurve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "eqdef/arith.hpp"
#include "eqdef/canonical.hpp"
#include "eqdef/error.hpp"
#include "eqdef/formulas.hpp"
#include "eqdef/localfield.hpp"

namespace eqdef {

namespace {

void trim_zeros(std::vector<FFElem>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

using Poly = std::vector<FFElem>;  // constant term first

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, a.front().field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

ASCurve::ASCurve(FieldPtr field, std::vector<FFElem> poly, std::vector<FinitePole> finite)
    : field_(std::move(field)), poly_(std::move(poly)), finite_(std::move(finite)) {
  require(field_ != nullptr, ErrorCode::InvalidArgument, "null field");
  const std::int64_t p = field_->p();
  trim_zeros(poly_);
  const auto n_inf = static_cast<std::int64_t>(poly_.size()) - 1;
  require(n_inf >= 1, ErrorCode::InvalidArgument, "f needs a pole at infinity");
  require(std::gcd(n_inf, p) == 1, ErrorCode::InvalidArgument,
          "pole order " + std::to_string(n_inf) + " at infinity is divisible by p");
  orders_.push_back(n_inf);
  for (std::size_t j = 0; j < finite_.size(); ++j) {
    auto& fp = finite_[j];
    trim_zeros(fp.coeffs);
    const auto n = static_cast<std::int64_t>(fp.coeffs.size());
    require(n >= 1, ErrorCode::InvalidArgument,
            "empty principal part at " + fp.point.to_string());
    require(std::gcd(n, p) == 1, ErrorCode::InvalidArgument,
            "pole order " + std::to_string(n) + " at x = " + fp.point.to_string() +
                " is divisible by p");
    for (std::size_t i = 0; i < j; ++i)
      require(!(finite_[i].point == fp.point), ErrorCode::InvalidArgument,
              "repeated pole " + fp.point.to_string());
    orders_.push_back(n);
  }
  std::vector<BranchOrbit> orbits;
  for (std::int64_t n : orders_)
    orbits.emplace_back(RamificationFiltration::from_lower_jumps(field_->p(), {n}));
  cover_ = std::make_shared<const CoverData>(field_->p(), 1, 0, std::move(orbits), true);

  for (std::size_t j = 0; j < orders_.size(); ++j) local_.push_back(expand(j));
  OrbitDivisor k(cover_);
  for (std::size_t j = 0; j < orders_.size(); ++j) k.set(j, local_[j].v_phi);
  canonical_ = std::move(k);
}

ASCurve ASCurve::parse(FieldPtr field, const std::string& text) {
  std::string f;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) f.push_back(ch);
  require(!f.empty(), ErrorCode::ParseError, "empty polynomial string");

  // Split at top-level signs that do not follow '^'.
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const char ch = f[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && i > 0 && f[i - 1] != '^') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);

  static const std::regex mono(R"(^([+-]?)(\d+)?\*?x(?:\^(-?\d+))?$)");
  static const std::regex pole(R"(^([+-]?)(\d+)?\*?\(x([+-])(\d+)\)\^(-\d+)$)");
  static const std::regex constant(R"(^([+-]?)(\d+)$)");

  std::map<std::int64_t, FFElem> poly;
  std::map<std::uint64_t, std::map<std::int64_t, FFElem>> finite;
  auto coeff = [&](const std::string& sign, const std::string& digits) {
    std::int64_t c = digits.empty() ? 1 : std::stoll(digits) % field->p();
    return field->element(sign == "-" ? -c : c);
  };
  auto add = [&](auto& m, auto key, const FFElem& c) {
    auto it = m.find(key);
    if (it == m.end())
      m.emplace(key, c);
    else
      it->second += c;
  };
  for (const auto& t : terms) {
    std::smatch mt;
    if (t.empty() || t == "+" || t == "-")
      fail(ErrorCode::ParseError, "dangling sign in '" + text + "'");
    if (std::regex_match(t, mt, mono)) {
      const FFElem c = coeff(mt[1], mt[2]);
      const std::int64_t e = mt[3].matched ? std::stoll(mt[3]) : 1;
      if (e >= 0)
        add(poly, e, c);
      else
        add(finite[0], -e, c);
    } else if (std::regex_match(t, mt, pole)) {
      const FFElem c = coeff(mt[1], mt[2]);
      // (x + a0) = (x - (-a0))
      const std::int64_t a0 = std::stoll(mt[4]) % field->p();
      const FFElem a = field->element(mt[3] == "+" ? -a0 : a0);
      add(finite[a.code()], -std::stoll(mt[5]), c);
    } else if (std::regex_match(t, mt, constant)) {
      add(poly, 0, coeff(mt[1], mt[2]));
    } else {
      fail(ErrorCode::ParseError, "cannot parse term '" + t + "'");
    }
  }

  std::vector<FFElem> pv;
  if (!poly.empty()) {
    pv.assign(static_cast<std::size_t>(poly.rbegin()->first) + 1, field->zero());
    for (const auto& [e, c] : poly) pv[static_cast<std::size_t>(e)] = c;
  }
  std::vector<FinitePole> fp;
  for (const auto& [code, parts] : finite) {
    std::vector<FFElem> cs(static_cast<std::size_t>(parts.rbegin()->first), field->zero());
    for (const auto& [e, c] : parts) cs[static_cast<std::size_t>(e - 1)] = c;
    fp.push_back({field->from_code(code), std::move(cs)});
  }
  return ASCurve(std::move(field), std::move(pv), std::move(fp));
}

std::string ASCurve::point_label(std::size_t j) const {
  require(j < orders_.size(), ErrorCode::InvalidArgument, "no such ramified point");
  if (j == 0) return "inf";
  return std::to_string(finite_[j - 1].point.code());
}

std::size_t ASCurve::ramified_index(const std::string& label) const {
  for (std::size_t j = 0; j < orders_.size(); ++j)
    if (point_label(j) == label) return j;
  fail(ErrorCode::NotRamifiedHere, "f has no pole at '" + label + "'");
}

std::string ASCurve::f_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (std::size_t e = poly_.size(); e-- > 0;) {
    if (poly_[e].is_zero()) continue;
    sep();
    os << "(" << poly_[e].to_string() << ")*x^" << e;
  }
  for (const auto& fp : finite_)
    for (std::size_t e = fp.coeffs.size(); e-- > 0;) {
      if (fp.coeffs[e].is_zero()) continue;
      sep();
      os << "(" << fp.coeffs[e].to_string() << ")*(x-" << fp.point.to_string() << ")^-"
         << e + 1;
    }
  return os.str();
}

LaurentSeries ASCurve::x_local(std::size_t j, std::int64_t prec) const {
  if (j == 0) return LaurentSeries::monomial(field_->one(), -1, prec);
  return LaurentSeries::from_terms(
      field_, {{0, finite_[j - 1].point}, {1, field_->one()}}, prec);
}

LaurentSeries ASCurve::f_local(std::size_t j, std::int64_t prec) const {
  require(j < orders_.size(), ErrorCode::InvalidArgument, "no such ramified point");
  const LaurentSeries x = x_local(j, prec);
  LaurentSeries f(field_, prec);
  for (std::size_t e = 0; e < poly_.size(); ++e) {
    if (poly_[e].is_zero()) continue;
    if (e == 0)
      f = f + LaurentSeries::monomial(poly_[0], 0, prec);
    else
      f = f + x.pow(static_cast<std::int64_t>(e)).scale(poly_[e]);
  }
  for (const auto& fp : finite_) {
    const LaurentSeries u = x.plus_constant(-fp.point);
    for (std::size_t e = 0; e < fp.coeffs.size(); ++e) {
      if (fp.coeffs[e].is_zero()) continue;
      f = f + u.pow(-static_cast<std::int64_t>(e + 1)).scale(fp.coeffs[e]);
    }
  }
  return f;
}

LocalValuations ASCurve::expand(std::size_t j) const {
  const std::int64_t p = field_->p();
  const std::int64_t n = orders_[j];
  const std::int64_t d = (p - 1) * (n + 1);
  const std::int64_t rel = d + 2 * p + 8;
  const LaurentSeries f = f_local(j, rel + 2 * n + 8);
  const ASExtension ext = build_extension(f, rel);
  const LaurentSeries xt = x_local(j, rel + 4).compose(ext.s_of_t);
  LocalValuations lv{};
  lv.v_x = xt.require_valuation();
  lv.v_y = ext.y_of_t.require_valuation();
  lv.v_dx = xt.derivative().require_valuation();
  lv.v_phi = lv.v_dx;
  if (!finite_.empty())
    lv.v_phi -= xt.plus_constant(-finite_[0].point).require_valuation();
  return lv;
}

const LocalValuations& ASCurve::local_valuations(std::size_t j) const {
  require(j < local_.size(), ErrorCode::NotRamifiedHere, "no such ramified point");
  return local_[j];
}

std::int64_t ASCurve::oracle_genus() const {
  const std::int64_t deg = canonical_->degree();
  require(mod_floor(deg, 2) == 0, ErrorCode::NonIntegralGenus,
          "canonical divisor of odd degree " + std::to_string(deg));
  return deg / 2 + 1;
}

OrbitDivisor ASCurve::named_divisor(const std::string& spec) const {
  static const std::regex token(R"(^(\d*)(K|Rred|R|e0|P(\d+)|0)$)");
  OrbitDivisor out(cover_);
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::stringstream ss(s);
  std::string part;
  const RamificationDivisor rd = ramification_divisor(cover_);
  bool any = false;
  while (std::getline(ss, part, '+')) {
    std::smatch m;
    require(std::regex_match(part, m, token), ErrorCode::ParseError,
            "cannot parse divisor term '" + part + "' (use K, R, Rred, e0, P<j>)");
    any = true;
    const std::int64_t k = m[1].length() ? std::stoll(m[1]) : 1;
    const std::string name = m[2];
    if (name == "K") {
      out = out + canonical_divisor() * k;
    } else if (name == "R") {
      out = out + rd.r * k;
    } else if (name == "Rred") {
      out = out + rd.reduced * k;
    } else if (name == "e0") {
      out = out + OrbitDivisor(cover_, {{std::size_t{0}, k * cover_->orbit(0).e0()}});
    } else if (name == "0") {
      continue;
    } else {
      const auto j = static_cast<std::size_t>(std::stoull(m[3]));
      require(j < orders_.size(), ErrorCode::InvalidArgument, "no ramified point " + m[3].str());
      out = out + OrbitDivisor(cover_, {{j, k}});
    }
  }
  require(any, ErrorCode::ParseError, "empty divisor specification");
  return out;
}

std::vector<std::int64_t> ASCurve::coefficients_of(const OrbitDivisor& d) const {
  require(d.cover() == cover_, ErrorCode::InvalidArgument, "divisor belongs to another cover");
  std::vector<std::int64_t> n(orders_.size(), 0);
  for (const auto& [key, c] : d.coeffs()) {
    const auto* j = std::get_if<std::size_t>(&key);
    require(j != nullptr, ErrorCode::InvalidArgument,
            "oracle divisors must be supported on ramified points (got " + to_string(key) + ")");
    n[*j] = c;
  }
  return n;
}

RRBasis ASCurve::box(const std::vector<std::int64_t>& n) const {
  const std::int64_t p = field_->p();
  RRBasis out;
  out.e.assign(orders_.size(), std::vector<std::int64_t>(static_cast<std::size_t>(p)));
  out.delta.assign(static_cast<std::size_t>(p), 0);
  for (std::size_t j = 0; j < orders_.size(); ++j)
    for (std::int64_t b = 0; b < p; ++b) {
      const std::int64_t e = floor_div(n[j] - orders_[j] * b, p);
      out.e[j][static_cast<std::size_t>(b)] = e;
      out.delta[static_cast<std::size_t>(b)] += e;
    }
  for (std::int64_t b = 0; b < p; ++b)
    for (std::int64_t i = 0; i <= out.delta[static_cast<std::size_t>(b)]; ++i)
      out.monomials.push_back({static_cast<std::uint32_t>(b), i});
  return out;
}

RRBasis ASCurve::rr_basis(const OrbitDivisor& d) const {
  require_genus_at_least_two(*cover_);
  const std::vector<std::int64_t> n = coefficients_of(d);
  RRBasis basis = box(n);
  const std::int64_t g = oracle_genus();
  const auto count = static_cast<std::int64_t>(basis.monomials.size());
  std::optional<std::int64_t> expected;
  if (d.degree() > 2 * g - 2)
    expected = d.degree() + 1 - g;
  else if (d.coeffs().empty())
    expected = 1;
  else if (d == canonical_divisor())
    expected = g;
  if (expected)
    require(count == *expected, ErrorCode::DimensionMismatch,
            "monomial basis has " + std::to_string(count) + " elements, Riemann-Roch gives " +
                std::to_string(*expected));
  return basis;
}

FFMatrix ASCurve::sigma_matrix(const RRBasis& basis) const {
  const std::uint32_t p = field_->p();
  std::vector<std::size_t> offset(p + 1, 0);
  for (std::uint32_t b = 0; b < p; ++b)
    offset[b + 1] = offset[b] + static_cast<std::size_t>(std::max<std::int64_t>(0, basis.delta[b] + 1));
  const std::size_t dim = basis.monomials.size();
  require(offset[p] == dim, ErrorCode::BasisNotStable, "basis does not match its block sizes");
  FFMatrix sigma(field_, dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto [b, i] = basis.monomials[col];
    for (std::uint32_t b2 = 0; b2 <= b; ++b2) {
      const std::uint32_t binom = binomial_mod(b, b2, p);
      if (binom == 0) continue;
      // x^i / F_b = (x^i F_{b2} / F_b) / F_{b2}
      Poly q(static_cast<std::size_t>(i) + 1, field_->zero());
      q.back() = field_->one();
      for (std::size_t j = 1; j < orders_.size(); ++j) {
        const std::int64_t ex = basis.e[j][b2] - basis.e[j][b];
        require(ex >= 0, ErrorCode::BasisNotStable, "negative exponent in block change");
        const Poly lin{-finite_[j - 1].point, field_->one()};
        for (std::int64_t k = 0; k < ex; ++k) q = poly_mul(q, lin);
      }
      for (std::size_t deg = 0; deg < q.size(); ++deg) {
        if (q[deg].is_zero()) continue;
        require(static_cast<std::int64_t>(deg) <= basis.delta[b2], ErrorCode::BasisNotStable,
                "image of a basis monomial leaves L(D)");
        sigma(offset[b2] + deg, col) += field_->element(binom) * q[deg];
      }
    }
  }
  return sigma;
}

JordanDecomposition ASCurve::decompose(const OrbitDivisor& d) const {
  const RRBasis basis = rr_basis(d);
  const FFMatrix sigma = sigma_matrix(basis);
  const std::size_t dim = basis.monomials.size();
  const std::int64_t p = field_->p();
  const FFMatrix nil = sigma - FFMatrix::identity(field_, dim);
  JordanDecomposition out;
  out.dim = static_cast<std::int64_t>(dim);
  out.ranks.push_back(out.dim);
  FFMatrix pw = FFMatrix::identity(field_, dim);
  for (std::int64_t i = 1; i <= p; ++i) {
    pw = pw * nil;
    out.ranks.push_back(static_cast<std::int64_t>(matrix_rank(pw)));
  }
  require(out.ranks.back() == 0, ErrorCode::ConsistencyError, "(sigma - 1)^p is not zero");
  for (std::int64_t l = 1; l <= p; ++l) {
    const std::int64_t next = l + 1 <= p ? out.ranks[static_cast<std::size_t>(l + 1)] : 0;
    out.multiplicities.push_back(out.ranks[static_cast<std::size_t>(l - 1)] -
                                 2 * out.ranks[static_cast<std::size_t>(l)] + next);
  }
  out.tot = out.ranks[0] - out.ranks[1];
  return out;
}

std::vector<std::int64_t> ASCurve::pole_numbers(std::size_t j, std::int64_t bound) const {
  require_genus_at_least_two(*cover_);
  require(j < orders_.size(), ErrorCode::NotRamifiedHere, "no such ramified point");
  const std::int64_t g = oracle_genus();
  require(bound >= 2 * g, ErrorCode::InvalidArgument,
          "bound " + std::to_string(bound) + " is below 2g = " + std::to_string(2 * g));
  std::vector<std::int64_t> out;
  std::size_t prev = 0;
  std::vector<std::int64_t> n(orders_.size(), 0);
  for (std::int64_t m = 0; m <= bound; ++m) {
    n[j] = m;
    const std::size_t dim = box(n).monomials.size();
    if (dim > prev) out.push_back(m);
    prev = dim;
  }
  const std::int64_t gaps = bound + 1 - static_cast<std::int64_t>(out.size());
  require(gaps == g, ErrorCode::ConsistencyError,
          std::to_string(gaps) + " gaps at " + point_label(j) + " but genus " + std::to_string(g));
  for (std::int64_t m = 2 * g; m <= bound; ++m)
    require(std::binary_search(out.begin(), out.end(), m), ErrorCode::ConsistencyError,
            std::to_string(m) + " >= 2g is not a pole number");
  return out;
}

std::vector<CrosscheckItem> crosscheck(const ASCurve& c) {
  const CoverPtr& cover = c.cover();
  std::vector<CrosscheckItem> items;
  const std::int64_t g = genus_x(*cover);
  items.push_back({"genus", "riemann_hurwitz", g, c.oracle_genus()});

  QuotientDivisor k_y;
  if (cover->r() == 1) {
    k_y.set(std::size_t{0}, -2);
  } else {
    k_y.set(std::size_t{0}, -1);
    k_y.set(std::size_t{1}, -1);
  }
  const OrbitDivisor k_formula = canonical_divisor_x(cover, k_y);
  for (std::size_t j = 0; j < c.num_ramified(); ++j)
    items.push_back({"canonical[" + c.point_label(j) + "]", "pullback_plus_different",
                     k_formula.coefficient(j), c.canonical_divisor().coefficient(j)});
  if (g < 2) return items;

  const OrbitDivisor two_k = c.named_divisor("2K");
  const JordanDecomposition dec = c.decompose(two_k);
  const std::int64_t p = c.p();
  items.push_back({"dim_quadratic_differentials", "riemann_roch", 3 * g - 3, dec.dim});
  items.push_back({"coinvariants", "cyclic", dim_cyclic(*cover).value, dec.tot});
  for (const std::string name : {"2K", "2K+3Rred", "2K+e0"}) {
    const OrbitDivisor d = c.named_divisor(name);
    items.push_back({"tot[" + name + "]", "tot_riemann_roch", tot_riemann_roch(d),
                     c.decompose(d).tot});
  }
  items.push_back({"regular_multiplicity", "m_regular_cyclic_p", m_regular_cyclic_p(*cover),
                   dec.multiplicities[static_cast<std::size_t>(p - 1)]});
  if (cover->weakly_ramified()) {
    items.push_back({"coinvariants_weakly", "weakly", dim_weakly_ramified(*cover).value, dec.tot});
    const JordanDecomposition aug = c.decompose(c.named_divisor("2K+3Rred"));
    items.push_back({"free_rank", "free_rank_aug", free_rank_aug(*cover),
                     aug.multiplicities[static_cast<std::size_t>(p - 1)]});
    std::int64_t non_free = 0;
    for (std::int64_t l = 1; l < p; ++l) non_free += aug.multiplicities[static_cast<std::size_t>(l - 1)];
    items.push_back({"non_free_summands", "free_rank_aug", 0, non_free});
  }
  const auto poles = c.pole_numbers(0, 2 * g + 2);
  items.push_back({"weierstrass_gaps[inf]", "genus", g,
                   2 * g + 3 - static_cast<std::int64_t>(poles.size())});
  return items;
}

}  // namespace eqdef
