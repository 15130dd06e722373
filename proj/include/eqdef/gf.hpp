#pragma once

// Exact arithmetic in finite fields F_{p^m} and dense matrices over them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eqdef/error.hpp"

namespace eqdef {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// An element of F_{p^m}, stored as its coordinates in the power basis
/// 1, x, ..., x^{m-1} modulo the field's defining polynomial.
///
/// Elements keep a reference to their field. Combining elements of two
/// different field objects throws FieldMismatch.
class FFElem {
 public:
  static constexpr unsigned kMaxDegree = 16;

  explicit FFElem(FieldPtr field);  // zero

  /// Image of an integer under Z -> F_p -> F_{p^m}.
  static FFElem from_int(FieldPtr field, std::int64_t value);
  /// Element with coordinates given by the base-p digits of `code`
  /// (least significant digit = constant term).
  static FFElem from_code(FieldPtr field, std::uint64_t code);
  static FFElem from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const std::uint32_t> coeffs() const noexcept;
  std::uint64_t code() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime field.
  bool in_prime_field() const noexcept;

  FFElem operator-() const;
  FFElem& operator+=(const FFElem& rhs);
  FFElem& operator-=(const FFElem& rhs);
  FFElem& operator*=(const FFElem& rhs);
  FFElem& operator/=(const FFElem& rhs);

  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator/(FFElem a, const FFElem& b) { return a /= b; }
  friend bool operator==(const FFElem& a, const FFElem& b);

  FFElem inverse() const;
  FFElem pow(std::int64_t e) const;

  std::string to_string() const;

 private:
  friend class FiniteField;
  FieldPtr field_;
  std::array<std::uint32_t, kMaxDegree> c_{};
};

std::ostream& operator<<(std::ostream& os, const FFElem& a);

/// F_{p^m} = F_p[x]/(modulus). The modulus is the first monic irreducible
/// polynomial of degree m in the order that reads coefficient vectors
/// (c_0, ..., c_{m-1}) as base-p numbers with c_0 least significant.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  std::uint32_t p() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic modulus, coefficients c_0..c_m (c_m == 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FFElem zero() const;
  FFElem one() const;
  FFElem element(std::int64_t v) const;
  FFElem from_code(std::uint64_t code) const;
  /// The class of x (a generator of the field over F_p).
  FFElem generator() const;

  /// All q elements, ordered by code.
  std::vector<FFElem> elements() const;

  /// Frobenius inverse: the unique b with b^p == a.
  FFElem pth_root(const FFElem& a) const;

 private:
  friend FieldPtr make_field(std::uint32_t p, unsigned m);
  friend class FFElem;
  friend bool operator==(const FFElem& a, const FFElem& b);

  FiniteField(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

  void check(const FFElem& a) const;
  void mul_into(FFElem& a, const FFElem& b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Builds F_{p^m}; throws NotPrime for composite p.
FieldPtr make_field(std::uint32_t p, unsigned m = 1);

FFElem pth_root(const FFElem& a);

/// True iff the monic polynomial with coefficients c_0..c_m (c_m == 1) is
/// irreducible over F_p.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Dense row-major matrix over a finite field.
class FFMatrix {
 public:
  FFMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FFMatrix identity(FieldPtr field, std::size_t n);
  static FFMatrix from_ints(FieldPtr field,
                            const std::vector<std::vector<std::int64_t>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FFElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FFElem& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  FFMatrix transpose() const;
  bool is_zero() const;

  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);
  friend FFMatrix operator+(const FFMatrix& a, const FFMatrix& b);
  friend FFMatrix operator-(const FFMatrix& a, const FFMatrix& b);
  friend bool operator==(const FFMatrix& a, const FFMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FFElem> data_;
};

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t matrix_rank(const FFMatrix& m);

/// Vectors in F_{p^m} viewed over the prime field: true iff the given
/// elements are linearly independent over F_p.
bool independent_over_prime_field(std::span<const FFElem> elems);

}  // namespace eqdef
