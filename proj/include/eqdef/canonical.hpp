#pragma once

// Ramification and canonical divisors of a cover, as G-invariant divisors.

#include <optional>

#include "eqdef/divisors.hpp"

namespace eqdef {

struct RamificationDivisor {
  OrbitDivisor r;        // sum d(P) [P]
  OrbitDivisor reduced;  // sum over X_ram of [P]
};

RamificationDivisor ramification_divisor(const CoverPtr& cover);

/// K_X = pi^* K_Y + R. Throws BadCanonicalDegree unless deg K_Y = 2 g_Y - 2;
/// the result is checked to have degree 2 g_X - 2.
OrbitDivisor canonical_divisor_x(const CoverPtr& cover, const QuotientDivisor& k_y);

/// An effective G-invariant canonical divisor whose support contains X_ram.
///
/// For g_Y = 0 the quotient differential is chosen with divisor -2[Q_0]
/// (r = 1) or -[Q_0] - [Q_1] (r >= 2), where Q_j is the image of branch
/// orbit j. For g_Y >= 1 the caller supplies div(phi) of a holomorphic
/// differential on Y whose zeroes avoid the branch points; that condition
/// is taken on trust, only its combinatorial shape is checked.
///
/// Requires p > 3 and r >= 1. Throws NotEffective if a coefficient comes
/// out negative (r = 1, g_Y = 0 needs a non-weakly ramified orbit).
OrbitDivisor effective_canonical(const CoverPtr& cover,
                                 const std::optional<QuotientDivisor>& div_phi = std::nullopt);

}  // namespace eqdef
