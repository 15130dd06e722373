#include "eqdef/gf.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "eqdef/arith.hpp"

namespace eqdef {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  auto [g, x, y] = ext_gcd(a, p);
  (void)g;
  (void)y;
  return static_cast<std::uint32_t>(mod_floor(x, p));
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - f * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= m/2.
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned m,
                         std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint64_t>(ipow(p, m))),
      modulus_(std::move(modulus)) {}

FieldPtr make_field(std::uint32_t p, unsigned m) {
  require(is_prime(p), ErrorCode::NotPrime,
          "characteristic " + std::to_string(p) + " is not prime");
  require(m >= 1 && m <= FFElem::kMaxDegree, ErrorCode::InvalidArgument,
          "extension degree must lie in [1, 16]");
  const std::uint64_t count = static_cast<std::uint64_t>(ipow(p, m));
  std::vector<std::uint32_t> modulus(m + 1, 0);
  modulus[m] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t v = n;
    for (unsigned i = 0; i < m; ++i) {
      modulus[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(modulus, p)) {
      return FieldPtr(new FiniteField(p, m, modulus));
    }
  }
  fail(ErrorCode::ConsistencyError, "no irreducible polynomial found");
}

void FiniteField::check(const FFElem& a) const {
  require(a.field_.get() == this, ErrorCode::FieldMismatch,
          "operands belong to different finite fields");
}

void FiniteField::mul_into(FFElem& a, const FFElem& b) const {
  std::array<std::uint64_t, 2 * FFElem::kMaxDegree> prod{};
  for (unsigned i = 0; i < m_; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p_;
  }
  // Reduce using x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
  for (unsigned k = 2 * m_ - 1; k-- > m_;) {
    const std::uint64_t f = prod[k];
    if (f == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i)
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - modulus_[i]) * f) % p_;
  }
  for (unsigned i = 0; i < m_; ++i) a.c_[i] = static_cast<std::uint32_t>(prod[i]);
}

FFElem FiniteField::zero() const { return FFElem(shared_from_this()); }
FFElem FiniteField::one() const { return element(1); }
FFElem FiniteField::element(std::int64_t v) const {
  return FFElem::from_int(shared_from_this(), v);
}
FFElem FiniteField::from_code(std::uint64_t code) const {
  return FFElem::from_code(shared_from_this(), code);
}

FFElem FiniteField::generator() const {
  if (m_ == 1) {
    // x is zero modulo the degree-one modulus; any primitive root would do,
    // but callers only need a field generator over F_p.
    return one();
  }
  FFElem g(shared_from_this());
  g.c_[1] = 1;
  return g;
}

std::vector<FFElem> FiniteField::elements() const {
  std::vector<FFElem> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) out.push_back(from_code(c));
  return out;
}

FFElem FiniteField::pth_root(const FFElem& a) const {
  check(a);
  // Frobenius has order m, so its inverse is a -> a^{p^{m-1}}.
  FFElem r = a;
  for (unsigned i = 1; i < m_; ++i) r = r.pow(p_);
  return r;
}

FFElem pth_root(const FFElem& a) { return a.field()->pth_root(a); }

FFElem::FFElem(FieldPtr field) : field_(std::move(field)) {
  require(field_ != nullptr, ErrorCode::InvalidArgument, "null field");
}

FFElem FFElem::from_int(FieldPtr field, std::int64_t value) {
  FFElem e(std::move(field));
  e.c_[0] = static_cast<std::uint32_t>(mod_floor(value, e.field_->p()));
  return e;
}

FFElem FFElem::from_code(FieldPtr field, std::uint64_t code) {
  FFElem e(std::move(field));
  require(code < e.field_->order(), ErrorCode::InvalidArgument,
          "element code out of range");
  for (unsigned i = 0; i < e.field_->degree(); ++i) {
    e.c_[i] = static_cast<std::uint32_t>(code % e.field_->p());
    code /= e.field_->p();
  }
  return e;
}

FFElem FFElem::from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs) {
  FFElem e(std::move(field));
  require(coeffs.size() == e.field_->degree(), ErrorCode::InvalidArgument,
          "coefficient vector length must equal the extension degree");
  for (unsigned i = 0; i < coeffs.size(); ++i) e.c_[i] = coeffs[i] % e.field_->p();
  return e;
}

std::span<const std::uint32_t> FFElem::coeffs() const noexcept {
  return {c_.data(), field_->degree()};
}

std::uint64_t FFElem::code() const noexcept {
  std::uint64_t code = 0;
  for (unsigned i = field_->degree(); i-- > 0;) code = code * field_->p() + c_[i];
  return code;
}

bool FFElem::is_zero() const noexcept {
  for (unsigned i = 0; i < field_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FFElem::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (unsigned i = 1; i < field_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FFElem::in_prime_field() const noexcept {
  for (unsigned i = 1; i < field_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FFElem FFElem::operator-() const {
  FFElem r(*this);
  const auto p = field_->p();
  for (unsigned i = 0; i < field_->degree(); ++i) r.c_[i] = (p - c_[i]) % p;
  return r;
}

FFElem& FFElem::operator+=(const FFElem& rhs) {
  field_->check(rhs);
  const auto p = field_->p();
  for (unsigned i = 0; i < field_->degree(); ++i) c_[i] = (c_[i] + rhs.c_[i]) % p;
  return *this;
}

FFElem& FFElem::operator-=(const FFElem& rhs) {
  field_->check(rhs);
  const auto p = field_->p();
  for (unsigned i = 0; i < field_->degree(); ++i)
    c_[i] = (c_[i] + p - rhs.c_[i]) % p;
  return *this;
}

FFElem& FFElem::operator*=(const FFElem& rhs) {
  field_->check(rhs);
  field_->mul_into(*this, rhs);
  return *this;
}

FFElem& FFElem::operator/=(const FFElem& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FFElem& a, const FFElem& b) {
  a.field_->check(b);
  return a.c_ == b.c_;
}

FFElem FFElem::inverse() const {
  require(!is_zero(), ErrorCode::InvalidArgument, "division by zero in finite field");
  return pow(static_cast<std::int64_t>(field_->order()) - 2);
}

FFElem FFElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FFElem result = field_->one();
  FFElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FFElem::to_string() const {
  if (field_->degree() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = field_->degree(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << 'w';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FFElem& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------

FFMatrix::FFMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(rows * cols, FFElem(field_)) {}

FFMatrix FFMatrix::identity(FieldPtr field, std::size_t n) {
  FFMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
  return m;
}

FFMatrix FFMatrix::from_ints(FieldPtr field,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FFMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field->element(rows[i][j]);
  }
  return m;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool FFMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const FFElem& e) { return e.is_zero(); });
}

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
  require(a.field_ == b.field_, ErrorCode::FieldMismatch, "matrix fields differ");
  require(a.cols_ == b.rows_, ErrorCode::InvalidArgument, "matrix shape mismatch");
  FFMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FFElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

FFMatrix operator+(const FFMatrix& a, const FFMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::InvalidArgument,
          "matrix shape mismatch");
  FFMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

FFMatrix operator-(const FFMatrix& a, const FFMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::InvalidArgument,
          "matrix shape mismatch");
  FFMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const FFMatrix& a, const FFMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t matrix_rank(const FFMatrix& input) {
  FFMatrix m = input;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    const FFElem inv = m(rank, col).inverse();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const FFElem f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool independent_over_prime_field(std::span<const FFElem> elems) {
  if (elems.empty()) return true;
  const FieldPtr& field = elems.front().field();
  const FieldPtr prime = make_field(field->p(), 1);
  FFMatrix m(prime, elems.size(), field->degree());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    require(elems[i].field() == field, ErrorCode::FieldMismatch,
            "elements belong to different fields");
    const auto c = elems[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = prime->element(c[j]);
  }
  return matrix_rank(m) == elems.size();
}

}  // namespace eqdef
