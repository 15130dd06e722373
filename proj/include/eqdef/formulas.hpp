#pragma once

// Closed-form dimension formulas for quadratic differentials of p-group
// covers. Every evaluator checks its own hypotheses and throws on violation;
// none falls back to another case.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqdef/cover.hpp"

namespace eqdef {

/// An evaluated formula together with the inputs it consumed.
struct DimensionReport {
  std::int64_t value = 0;
  std::string formula_id;
  std::int64_t genus_quotient = 0;
  std::size_t r = 0;
  /// Per-orbit summand of the formula, in orbit order.
  std::vector<std::int64_t> orbit_terms;
};

/// Tame reference value 3 g_Y - 3 + r.
DimensionReport dim_tame(const CoverData& c);

/// dim H^0(X, Omega^{⊗2})_G = 3 g_Y - 3 + sum floor(2 d_j / e_0(j)) for
/// cyclic G.
DimensionReport dim_cyclic(const CoverData& c);

/// 2 (1 + M) + floor(-2 (1 + N) / e_0); equals floor(2 d / e_0).
std::int64_t hasse_arf_identity_rhs(const JumpData& j, std::uint32_t p);

/// Weakly ramified case: 3 g_Y - 3 + sum log_p e_0(j) + (2r if p > 3, else r).
DimensionReport dim_weakly_ramified(const CoverData& c);

/// Rank over k[G] of H^0(X, Omega^{⊗2}(3 R_red)) in the weakly ramified
/// case: 3 (g_Y - 1 + r).
std::int64_t free_rank_aug(const CoverData& c);

/// dim H_0 and H_1 of G acting on the skyscraper quotient
/// Omega^{⊗2}(3R_red) / Omega^{⊗2}. For p = 2 only the difference is known.
struct HomologyDims {
  std::optional<std::int64_t> h0;
  std::optional<std::int64_t> h1;
  std::int64_t difference = 0;  // h0 - h1
};

HomologyDims homology_dims_closed(const CoverData& c);

/// Borne invariant b(G, D, k): the rank of the free semisimple part of
/// H^0(X, Omega(D)) for the effective canonical D of `effective_canonical`.
/// `deg_phi_red` (degree of div(phi)_red) is required iff g_Y >= 1.
std::int64_t p_rank_free_rank(const CoverData& c, std::int64_t gamma_y,
                              std::optional<std::int64_t> deg_phi_red);

/// dim H^0(Omega^{⊗2})_G = dim (H_D^n)_G + b.
std::int64_t coinvariants_from_nilpotent(std::int64_t nilpotent_coinvariants,
                                         std::int64_t borne_invariant);

/// Multiplicity of k[G] in H_D^n: m_{k[G]} - b.
std::int64_t nilpotent_free_multiplicity(std::int64_t regular_multiplicity,
                                         std::int64_t borne_invariant);

/// Multiplicity of k[G] in H^0(X, Omega^{⊗2}) for G cyclic of order p:
/// 3 g_Y - 3 + sum floor((N_j + 2)(p - 1) / p).
std::int64_t m_regular_cyclic_p(const CoverData& c);

}  // namespace eqdef
