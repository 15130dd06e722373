#pragma once

// Artin-Schreier extensions of k((s)): normalization of the right-hand
// side, expansion of s and y in a uniformizer t of the extension, jump
// measurement, weakly ramified towers, and the pole-number check.

#include <cstdint>
#include <optional>
#include <vector>

#include "eqdef/laurent.hpp"

namespace eqdef {

/// One subtracted Artin-Schreier term w = coefficient * s^exponent.
struct ASCorrection {
  FFElem coefficient;
  std::int64_t exponent;
};

struct NormalizedAS {
  LaurentSeries x;  // v(x) = -m with gcd(m, p) = 1
  std::int64_t m;
  std::vector<ASCorrection> corrections;
};

/// Peels leading terms u s^{-lp} by replacing x with x - w^p + w, where
/// w = u^{1/p} s^{-l}, until the valuation is prime to p.
/// Throws NonNegativeValuation if v(x) >= 0 at any point and
/// PrecisionExhausted if the leading coefficient cannot be read.
NormalizedAS as_normalize(const LaurentSeries& x);

/// y^p - y = x(s) with v(x) = -m, gcd(m, p) = 1, and t = s^r y^{-l},
/// rp + lm = 1. s(t) and y(t) are known to relative precision >= prec.
struct ASExtension {
  std::uint32_t p;
  std::int64_t m;
  std::int64_t r;
  std::int64_t l;
  LaurentSeries x;
  LaurentSeries s_of_t;
  LaurentSeries y_of_t;
  std::int64_t prec;
};

/// Solves for s(t), y(t) by fixed-point iteration on the unit W with
/// s = t^p W^l, y = t^{-m} W^r. Throws NoConvergence if successive
/// iterates disagree and PrecisionExhausted if the input runs out.
ASExtension build_extension(const LaurentSeries& x_norm, std::int64_t prec);

/// v(sigma(t) - t) - 1 for sigma: y -> y + c, c a nonzero element of F_p.
std::int64_t measure_jump(const ASExtension& ext, const FFElem& c);

/// Default relative precision for jump measurement.
inline std::int64_t default_jump_prec(std::int64_t m) { return 2 * m + 8; }

struct AlphaBetaPair {
  FFElem alpha;
  FFElem beta;
};

/// Reads g(t) = t + a t^2 + b t^3 + ...; throws NotWeaklyRamifiedAction
/// unless the series starts with exactly t.
AlphaBetaPair extract_alpha_beta(const LaurentSeries& gt);

/// Tower k((t_0)) c k((t_1)) c ... c k((t_n)) with
///   y_1^p - y_1 = t_0^{-1},  y_i^p - y_i = c_{i-1} t_{i-1}^{-1},  t_i = y_i^{-1}.
struct TowerElement {
  std::vector<FFElem> shifts;  // g(y_i) = y_i + b_i
  LaurentSeries image;         // g(t_n)
};

struct Tower {
  std::uint32_t p;
  std::vector<FFElem> constants;     // c_1..c_{n-1}
  std::vector<ASExtension> layers;   // layer i over k((t_{i-1}))
  /// t_0..t_n and y_1..y_n as series in t_n.
  std::vector<LaurentSeries> params;
  std::vector<LaurentSeries> ys;
  std::vector<TowerElement> elements;
  std::int64_t prec;
};

/// Builds the tower, enumerates its p^n automorphisms over k((t_0)), and
/// verifies each by substitution into every layer (ConsistencyError on
/// failure). Throws FieldTooSmall when some layer lacks p roots in k.
Tower build_tower(FieldPtr field, std::size_t n, const std::vector<FFElem>& constants,
                  std::int64_t prec);

/// First constants c_1..c_{n-1} (by code order) for which every layer of the
/// tower splits over the field, or nothing.
std::optional<std::vector<FFElem>> find_tower_constants(const FieldPtr& field, std::size_t n);

/// Composite automorphism g(h(t)) given the images G = g(t), H = h(t).
LaurentSeries compose_actions(const LaurentSeries& g_image, const LaurentSeries& h_image);

struct WeierstrassReport {
  bool pass;
  std::int64_t m;  // smallest odd pole number
};

/// Smallest odd pole number m <= bound in the list; pass iff m = 1 mod 4
/// and m - 1 is also listed. Throws NoOddPoleNumber when none exists.
WeierstrassReport weierstrass_check(const std::vector<std::int64_t>& pole_numbers,
                                    std::int64_t bound);

}  // namespace eqdef
