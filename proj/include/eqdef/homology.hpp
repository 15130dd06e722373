#pragma once

// H_0 and H_1 of an elementary abelian group G = (Z/p)^s acting on the
// three-dimensional module V spanned by w1, w2, w3 with
//   g(w1) = w1,  g(w2) = w2 + 2 a(g) w1,  g(w3) = w3 + a(g) w2 + b(g) w1,
// computed from the tensor product of the periodic resolutions of the
// cyclic factors.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eqdef/gf.hpp"

namespace eqdef {

/// Values of a and b on the standard generators g_1..g_s.
struct AlphaBeta {
  FieldPtr field;
  std::vector<FFElem> alpha;
  std::vector<FFElem> beta;

  AlphaBeta(FieldPtr f, std::vector<FFElem> a, std::vector<FFElem> b);

  std::size_t s() const noexcept { return alpha.size(); }
  std::uint32_t p() const noexcept { return field->p(); }
  /// a is injective iff the a(g_i) are independent over F_p.
  bool alpha_injective() const;
  /// True when b = c a for some c in the field.
  bool beta_proportional() const;

  /// (a, b) of the element g_1^{e_1} ... g_s^{e_s}, extending a additively
  /// and b by b(hg) = b(h) + 2 a(h) a(g) + b(g).
  std::pair<FFElem, FFElem> evaluate(const std::vector<std::uint32_t>& exponents) const;
};

/// Matrix of g acting on V in the basis (w1, w2, w3); column j is g(w_j).
FFMatrix action_matrix(const FFElem& alpha, const FFElem& beta);

struct ChainComplex {
  FFMatrix d1;  // V^s -> V
  FFMatrix d2;  // V^s + V^{s(s-1)/2} -> V^s
};

ChainComplex build_complex(const AlphaBeta& ab);

struct HomologyResult {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
};

/// h0 = 3 - rank d1, h1 = 3s - rank d1 - rank d2.
HomologyResult homology_dims(const AlphaBeta& ab);

/// Closed form for injective a. For p = 2 only the difference h0 - h1 is
/// set (h0, h1 empty).
struct ClosedForm {
  std::optional<std::int64_t> h0;
  std::optional<std::int64_t> h1;
  std::int64_t difference = 0;
};

ClosedForm closed_form(const AlphaBeta& ab);

/// Branch used when drawing b.
enum class BetaMode { Free, Proportional, Square };

/// Draws injective a over F_{p^s} and b according to `mode`.
AlphaBeta random_alpha_beta(std::uint32_t p, std::size_t s, BetaMode mode,
                            std::mt19937_64& rng);

}  // namespace eqdef
