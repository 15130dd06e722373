#pragma once

// Explicit Artin-Schreier curves y^p - y = f(x) over F_{p^m} with
// G = Z/p acting by y -> y + 1, used as ground truth for the dimension
// formulas.
//
// f has a pole at infinity (polynomial part of degree N_inf prime to p)
// and optionally poles at finite points a_j (principal parts of order N_j
// prime to p). Each pole is totally ramified with lower jump N. Away from
// the poles the ring of regular functions is free over k[x, 1/prod(x - a_j)]
// with basis 1, y, ..., y^{p-1}, and at a pole the summands c_b(x) y^b
// have distinct valuations mod p, so L(D) for D supported on the poles has
// the basis x^i y^b / F_b described in rr_basis.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqdef/divisors.hpp"
#include "eqdef/gf.hpp"
#include "eqdef/laurent.hpp"

namespace eqdef {

/// Principal part sum_e coeffs[e-1] (x - point)^{-e}.
struct FinitePole {
  FFElem point;
  std::vector<FFElem> coeffs;
};

struct LocalValuations {
  std::int64_t v_x;
  std::int64_t v_y;
  std::int64_t v_dx;
  /// Valuation of the differential used for the canonical divisor.
  std::int64_t v_phi;
};

/// x^i y^b / F_b.
struct BasisMonomial {
  std::uint32_t b;
  std::int64_t i;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

struct RRBasis {
  std::vector<BasisMonomial> monomials;
  /// E[j][b] = floor((n_j - N_j b) / p) per ramified point j.
  std::vector<std::vector<std::int64_t>> e;
  /// Highest power of x in block b (negative: empty block).
  std::vector<std::int64_t> delta;
};

struct JordanDecomposition {
  std::int64_t dim = 0;
  std::vector<std::int64_t> ranks;           // rank (sigma - 1)^i, i = 0..p
  std::vector<std::int64_t> multiplicities;  // m_1..m_p
  std::int64_t tot = 0;
};

class ASCurve {
 public:
  /// `poly` holds the coefficients of the polynomial part, constant term
  /// first. Throws InvalidArgument unless every pole order is prime to p
  /// and the finite poles are distinct.
  ASCurve(FieldPtr field, std::vector<FFElem> poly, std::vector<FinitePole> finite);

  /// Parses a sum of terms c*x^e (e may be negative), c*(x-a)^-e and
  /// constants, with integer constants taken in the prime field.
  static ASCurve parse(FieldPtr field, const std::string& f);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_->p(); }
  /// Ramified points: index 0 is infinity, then the finite poles in order.
  std::size_t num_ramified() const noexcept { return orders_.size(); }
  std::int64_t pole_order(std::size_t j) const { return orders_.at(j); }
  const std::vector<FinitePole>& finite_poles() const noexcept { return finite_; }
  std::string point_label(std::size_t j) const;
  /// Index of the ramified point named "inf" or by a field element code.
  /// Throws NotRamifiedHere otherwise.
  std::size_t ramified_index(const std::string& label) const;

  /// Cover data (p, |G| = p, g_Y = 0, one orbit per pole).
  const CoverPtr& cover() const noexcept { return cover_; }
  std::string f_string() const;

  /// Expansion of f in the uniformizer of P^1 at the j-th pole.
  LaurentSeries f_local(std::size_t j, std::int64_t prec) const;
  const LocalValuations& local_valuations(std::size_t j) const;

  /// div(phi) with phi = dx (no finite poles) or dx / (x - a_1), from the
  /// local expansions.
  const OrbitDivisor& canonical_divisor() const { return *canonical_; }
  /// deg K / 2 + 1 from canonical_divisor().
  std::int64_t oracle_genus() const;

  /// D = 0, D = K, or a named combination like "2K+3Rred", "2K+e0", "R".
  OrbitDivisor named_divisor(const std::string& spec) const;

  /// Basis of L(D) for D supported on the ramified points. The count is
  /// checked against Riemann-Roch when deg D > 2g - 2, D = 0 or D = K
  /// (DimensionMismatch otherwise).
  RRBasis rr_basis(const OrbitDivisor& d) const;
  /// Matrix of y -> y + 1 on the basis; column k is the image of monomial k.
  FFMatrix sigma_matrix(const RRBasis& basis) const;
  JordanDecomposition decompose(const OrbitDivisor& d) const;

  /// m in [0, bound] with dim L(mP) > dim L((m-1)P). Needs bound >= 2g.
  /// The gap count is checked against the genus.
  std::vector<std::int64_t> pole_numbers(std::size_t j, std::int64_t bound) const;

 private:
  std::vector<std::int64_t> coefficients_of(const OrbitDivisor& d) const;
  RRBasis box(const std::vector<std::int64_t>& n) const;
  LaurentSeries x_local(std::size_t j, std::int64_t prec) const;
  LocalValuations expand(std::size_t j) const;

  FieldPtr field_;
  std::vector<FFElem> poly_;
  std::vector<FinitePole> finite_;
  std::vector<std::int64_t> orders_;
  CoverPtr cover_;
  std::optional<OrbitDivisor> canonical_;
  std::vector<LocalValuations> local_;
};

/// One formula-versus-oracle comparison.
struct CrosscheckItem {
  std::string name;
  std::string formula;
  std::int64_t formula_value;
  std::int64_t oracle_value;
  bool match() const noexcept { return formula_value == oracle_value; }
};

/// Compares every applicable closed formula with the oracle on this curve.
std::vector<CrosscheckItem> crosscheck(const ASCurve& c);

}  // namespace eqdef
