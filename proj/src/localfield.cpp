#include "eqdef/localfield.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"

namespace eqdef {

NormalizedAS as_normalize(const LaurentSeries& x0) {
  const std::int64_t p = x0.field()->p();
  LaurentSeries x = x0;
  std::vector<ASCorrection> corrections;
  for (;;) {
    if (x.is_zero()) {
      require(x.prec() >= 0, ErrorCode::PrecisionExhausted,
              "series vanishes to precision " + std::to_string(x.prec()) +
                  "; cannot read its valuation");
      fail(ErrorCode::NonNegativeValuation,
           "x lies in the Artin-Schreier image plus O(s^" + std::to_string(x.prec()) + ")");
    }
    const std::int64_t v = *x.valuation();
    require(v < 0, ErrorCode::NonNegativeValuation,
            "v(x) = " + std::to_string(v) + " is not negative");
    if (mod_floor(v, p) != 0) return {x, -v, corrections};
    const std::int64_t l = -v / p;
    const FFElem u0 = x.leading();
    const FFElem v0 = pth_root(u0);
    x = x - LaurentSeries::monomial(u0, v, x.prec()) +
        LaurentSeries::monomial(v0, -l, x.prec());
    corrections.push_back({v0, -l});
  }
}

ASExtension build_extension(const LaurentSeries& x, std::int64_t prec) {
  const FieldPtr& k = x.field();
  const std::int64_t p = k->p();
  require(prec >= 1, ErrorCode::InvalidArgument, "precision must be positive");
  const std::int64_t v = x.require_valuation();
  require(v < 0, ErrorCode::NonNegativeValuation,
          "v(x) = " + std::to_string(v) + " gives an unramified extension");
  const std::int64_t m = -v;
  require(std::gcd(m, p) == 1, ErrorCode::InvalidArgument,
          "v(x) = " + std::to_string(v) + " is divisible by p; normalize first");
  std::int64_t r = 0;
  while ((r * p) % m != 1 % m) ++r;
  const std::int64_t l = (1 - r * p) / m;

  // x = s^{-m} eps(s). With s = t^p W^l and y = t^{-m} W^r the equation
  // y^p - y = x becomes W = eps(t^p W^l) + t^{m(p-1)} W^{r + lm}.
  const LaurentSeries eps = x.shift(m);
  const std::int64_t target = prec + m * p;
  LaurentSeries w = LaurentSeries::monomial(eps.leading(), 0, 1);
  for (std::int64_t iter = 0;; ++iter) {
    require(iter <= target + 1, ErrorCode::NoConvergence, "fixed-point iteration did not settle");
    const LaurentSeries s = w.pow(l).shift(p);
    const LaurentSeries next =
        (eps.compose(s, target) + w.pow(r + l * m).shift(m * (p - 1))).truncate(target);
    require(next.agrees_with(w), ErrorCode::NoConvergence,
            "successive approximations disagree; input is not a valid right-hand side");
    if (next.prec() >= target) {
      w = next;
      break;
    }
    require(next.prec() > w.prec(), ErrorCode::PrecisionExhausted,
            "input precision " + std::to_string(x.prec()) + " stalls the expansion at t^" +
                std::to_string(w.prec()));
    w = next;
  }

  LaurentSeries s = w.pow(l).shift(p);
  LaurentSeries y = w.pow(r).shift(-m);

  const LaurentSeries rel1 = y.frobenius() - y - x.compose(s);
  require(rel1.prec() >= -m * p + prec, ErrorCode::PrecisionExhausted,
          "Artin-Schreier residual only known to t^" + std::to_string(rel1.prec()));
  if (!rel1.is_zero())
    fail(ErrorCode::ConsistencyError,
         "Artin-Schreier relation fails at t^" + std::to_string(*rel1.valuation()));
  const LaurentSeries t_again = s.pow(r) * y.pow(-l);
  const LaurentSeries rel2 = t_again - LaurentSeries::monomial(k->one(), 1, t_again.prec());
  require(rel2.prec() >= 1 + prec, ErrorCode::PrecisionExhausted,
          "uniformizer residual only known to t^" + std::to_string(rel2.prec()));
  require(rel2.is_zero(), ErrorCode::ConsistencyError, "t != s^r y^{-l}");

  return ASExtension{static_cast<std::uint32_t>(p), m, r, l, x, std::move(s), std::move(y), prec};
}

std::int64_t measure_jump(const ASExtension& ext, const FFElem& c) {
  require(!c.is_zero() && c.in_prime_field(), ErrorCode::InvalidArgument,
          "translation y -> y + c needs c in F_p, c != 0");
  const LaurentSeries sigma_t =
      ext.s_of_t.pow(ext.r) * ext.y_of_t.plus_constant(c).pow(-ext.l);
  const LaurentSeries diff =
      sigma_t - LaurentSeries::monomial(c.field()->one(), 1, sigma_t.prec());
  return diff.require_valuation() - 1;
}

AlphaBetaPair extract_alpha_beta(const LaurentSeries& gt) {
  require(!gt.is_zero() && *gt.valuation() == 1 && gt.leading().is_one(),
          ErrorCode::NotWeaklyRamifiedAction, "g(t) does not start with t: " + gt.to_string());
  return {gt.coeff(2), gt.coeff(3)};
}

LaurentSeries compose_actions(const LaurentSeries& g_image, const LaurentSeries& h_image) {
  // g(h(t)) = g(H(t)) = H(g(t)).
  return h_image.compose(g_image);
}

namespace {

std::vector<FFElem> as_roots(const FieldPtr& k, const FFElem& a) {
  std::vector<FFElem> roots;
  for (const auto& z : k->elements())
    if (z.pow(k->p()) - z == a) roots.push_back(z);
  return roots;
}

// Last coordinates b_i reachable in the group; empty if some layer fails.
std::vector<FFElem> next_shifts(const FieldPtr& k, const FFElem& c,
                                const std::vector<FFElem>& prev) {
  std::vector<FFElem> out;
  for (const auto& b : prev) {
    auto roots = as_roots(k, c * b);
    if (roots.size() != k->p()) return {};
    for (auto& z : roots)
      if (std::none_of(out.begin(), out.end(), [&](const FFElem& u) { return u == z; }))
        out.push_back(z);
  }
  return out;
}

std::vector<FFElem> prime_field(const FieldPtr& k) {
  std::vector<FFElem> out;
  for (std::uint32_t i = 0; i < k->p(); ++i) out.push_back(k->element(i));
  return out;
}

}  // namespace

std::optional<std::vector<FFElem>> find_tower_constants(const FieldPtr& field, std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "tower rank must be at least 1");
  std::vector<FFElem> chosen;
  std::function<bool(const std::vector<FFElem>&)> search = [&](const std::vector<FFElem>& prev) {
    if (chosen.size() + 1 == n) return true;
    for (std::uint64_t code = 1; code < field->order(); ++code) {
      const FFElem c = field->from_code(code);
      auto next = next_shifts(field, c, prev);
      if (next.empty()) continue;
      chosen.push_back(c);
      if (search(next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(prime_field(field))) return std::nullopt;
  return chosen;
}

Tower build_tower(FieldPtr field, std::size_t n, const std::vector<FFElem>& constants,
                  std::int64_t prec) {
  require(n >= 1, ErrorCode::InvalidArgument, "tower rank must be at least 1");
  require(constants.size() + 1 == n, ErrorCode::InvalidArgument,
          "a rank-n tower needs n - 1 constants");
  for (const auto& c : constants) {
    require(c.field() == field, ErrorCode::FieldMismatch, "constant from another field");
    require(!c.is_zero(), ErrorCode::InvalidArgument, "tower constants must be nonzero");
  }
  const std::int64_t p = field->p();
  Tower tw{static_cast<std::uint32_t>(p), constants, {}, {}, {}, {}, prec};

  for (std::size_t i = 1; i <= n; ++i) {
    const FFElem c = i == 1 ? field->one() : constants[i - 2];
    const LaurentSeries x = LaurentSeries::monomial(c, -1, prec + p);
    tw.layers.push_back(build_extension(x, prec));
  }

  // t_n, t_{n-1}, ..., t_0 as series in t_n.
  tw.params.assign(n + 1, LaurentSeries(field, 0));
  tw.params[n] = LaurentSeries::monomial(field->one(), 1, 1 + prec);
  for (std::size_t i = n; i >= 1; --i)
    tw.params[i - 1] = tw.layers[i - 1].s_of_t.compose(tw.params[i]);
  tw.ys.assign(n + 1, LaurentSeries(field, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    const ASExtension& e = tw.layers[i - 1];
    tw.ys[i] = e.y_of_t.compose(tw.params[i]);
  }

  // Group elements: b_1 in F_p, b_i^p - b_i = c_{i-1} b_{i-1}.
  std::vector<std::vector<FFElem>> tuples;
  for (const auto& b1 : prime_field(field)) tuples.push_back({b1});
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<std::vector<FFElem>> grown;
    for (const auto& tup : tuples) {
      const auto roots = as_roots(field, constants[i - 2] * tup.back());
      require(roots.size() == static_cast<std::size_t>(p), ErrorCode::FieldTooSmall,
              "layer " + std::to_string(i) + " has " + std::to_string(roots.size()) +
                  " Artin-Schreier roots in F_" + std::to_string(field->order()));
      for (const auto& z : roots) {
        grown.push_back(tup);
        grown.back().push_back(z);
      }
    }
    tuples = std::move(grown);
  }

  for (auto& b : tuples) {
    // g(t_i) = g(t_{i-1})^r (y_i + b_i)^{-l}, everything in t_n.
    LaurentSeries gt = tw.params[0];
    for (std::size_t i = 1; i <= n; ++i) {
      const ASExtension& e = tw.layers[i - 1];
      LaurentSeries moved = tw.ys[i].plus_constant(b[i - 1]).pow(-e.l);
      gt = e.r == 0 ? moved : gt.pow(e.r) * moved;
    }
    // Substitution check on every layer.
    const auto check = [&](const LaurentSeries& lhs, const LaurentSeries& rhs,
                           const std::string& what) {
      require(lhs.agrees_with(rhs), ErrorCode::ConsistencyError,
              "automorphism fails on " + what);
      const std::int64_t known = std::min(lhs.prec(), rhs.prec()) - rhs.require_valuation();
      require(known >= 3, ErrorCode::PrecisionExhausted,
              "only " + std::to_string(known) + " terms verified on " + what);
    };
    check(tw.params[0].compose(gt), tw.params[0], "t_0");
    for (std::size_t i = 1; i <= n; ++i)
      check(tw.ys[i].compose(gt), tw.ys[i].plus_constant(b[i - 1]),
            "y_" + std::to_string(i));
    tw.elements.push_back({std::move(b), std::move(gt)});
  }
  return tw;
}

WeierstrassReport weierstrass_check(const std::vector<std::int64_t>& pole_numbers,
                                    std::int64_t bound) {
  std::vector<std::int64_t> sorted = pole_numbers;
  std::sort(sorted.begin(), sorted.end());
  for (std::int64_t m : sorted) {
    if (m > bound) break;
    if (mod_floor(m, 2) != 1) continue;
    const bool prev = std::binary_search(sorted.begin(), sorted.end(), m - 1);
    return {mod_floor(m, 4) == 1 && prev, m};
  }
  fail(ErrorCode::NoOddPoleNumber,
       "no odd pole number up to " + std::to_string(bound));
}

}  // namespace eqdef
