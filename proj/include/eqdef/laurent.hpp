#pragma once

// Truncated Laurent series sum_{i >= v} c_i s^i + O(s^prec) over F_{p^m}.
//
// Every operation propagates the absolute precision pessimistically, and
// reading a coefficient at or beyond the precision bound throws
// PrecisionExhausted.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdef/gf.hpp"

namespace eqdef {

class LaurentSeries {
 public:
  /// O(s^prec).
  LaurentSeries(FieldPtr field, std::int64_t prec);

  static LaurentSeries monomial(const FFElem& c, std::int64_t exponent, std::int64_t prec);
  static LaurentSeries from_terms(FieldPtr field,
                                  const std::vector<std::pair<std::int64_t, FFElem>>& terms,
                                  std::int64_t prec);

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t prec() const noexcept { return prec_; }
  /// True when every coefficient below prec vanishes.
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Leading exponent; empty when the series is zero to precision.
  std::optional<std::int64_t> valuation() const;
  /// Throws PrecisionExhausted when the series is zero to precision.
  std::int64_t require_valuation() const;
  /// Leading coefficient of a nonzero series.
  const FFElem& leading() const;
  FFElem coeff(std::int64_t exponent) const;
  /// Number of known terms past the leading one (prec - v).
  std::int64_t relative_prec() const;

  LaurentSeries truncate(std::int64_t prec) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scale(const FFElem& c) const;
  /// Multiplication by s^k.
  LaurentSeries shift(std::int64_t k) const;
  /// Adds the constant c (exact).
  LaurentSeries plus_constant(const FFElem& c) const;

  LaurentSeries inverse() const;
  LaurentSeries pow(std::int64_t e) const;
  /// a(s)^p computed as sum c_i^p s^{ip}.
  LaurentSeries frobenius() const;
  /// a(inner(t)) for inner of positive valuation, truncated at `cap` if given.
  LaurentSeries compose(const LaurentSeries& inner,
                        std::optional<std::int64_t> cap = std::nullopt) const;
  LaurentSeries derivative() const;

  /// Coefficients agree on every exponent below min of both precisions.
  bool agrees_with(const LaurentSeries& other) const;

  /// Nonzero terms as (exponent, element).
  std::vector<std::pair<std::int64_t, FFElem>> terms() const;
  std::string to_string() const;

 private:
  LaurentSeries(FieldPtr field, std::int64_t start, std::vector<FFElem> coeffs,
                std::int64_t prec);
  void normalize();

  FieldPtr field_;
  std::int64_t val_;              // exponent of coeffs_[0], or prec_ when zero
  std::vector<FFElem> coeffs_;    // exponents val_ .. prec_ - 1
  std::int64_t prec_;
};

}  // namespace eqdef
