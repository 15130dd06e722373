#include "eqdef/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "eqdef/error.hpp"

namespace eqdef {

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t prec)
    : field_(std::move(field)), val_(prec), prec_(prec) {
  require(field_ != nullptr, ErrorCode::InvalidArgument, "null field");
}

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t start, std::vector<FFElem> coeffs,
                             std::int64_t prec)
    : field_(std::move(field)), val_(start), coeffs_(std::move(coeffs)), prec_(prec) {
  normalize();
}

void LaurentSeries::normalize() {
  // Fit the storage to [val_, prec_), then strip leading zeros.
  if (val_ >= prec_)
    coeffs_.clear();
  else
    coeffs_.resize(static_cast<std::size_t>(prec_ - val_), field_->zero());
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<std::int64_t>(lead);
}

LaurentSeries LaurentSeries::monomial(const FFElem& c, std::int64_t exponent,
                                      std::int64_t prec) {
  return LaurentSeries(c.field(), exponent, {c}, prec);
}

LaurentSeries LaurentSeries::from_terms(
    FieldPtr field, const std::vector<std::pair<std::int64_t, FFElem>>& terms,
    std::int64_t prec) {
  if (terms.empty()) return LaurentSeries(std::move(field), prec);
  std::int64_t lo = prec;
  for (const auto& [e, c] : terms) {
    require(c.field() == field, ErrorCode::FieldMismatch, "series term from another field");
    lo = std::min(lo, e);
  }
  if (lo >= prec) return LaurentSeries(std::move(field), prec);
  std::vector<FFElem> co(static_cast<std::size_t>(prec - lo), field->zero());
  for (const auto& [e, c] : terms)
    if (e < prec) co[static_cast<std::size_t>(e - lo)] += c;
  return LaurentSeries(std::move(field), lo, std::move(co), prec);
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
  if (is_zero()) return std::nullopt;
  return val_;
}

std::int64_t LaurentSeries::require_valuation() const {
  require(!is_zero(), ErrorCode::PrecisionExhausted,
          "series vanishes to precision " + std::to_string(prec_) +
              "; valuation unknown");
  return val_;
}

const FFElem& LaurentSeries::leading() const {
  require_valuation();
  return coeffs_.front();
}

FFElem LaurentSeries::coeff(std::int64_t exponent) const {
  require(exponent < prec_, ErrorCode::PrecisionExhausted,
          "coefficient of s^" + std::to_string(exponent) + " lies beyond precision " +
              std::to_string(prec_));
  if (exponent < val_) return field_->zero();
  return coeffs_[static_cast<std::size_t>(exponent - val_)];
}

std::int64_t LaurentSeries::relative_prec() const { return prec_ - val_; }

LaurentSeries LaurentSeries::truncate(std::int64_t prec) const {
  if (prec >= prec_) return *this;
  return LaurentSeries(field_, val_, coeffs_, prec);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool negate_b);

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return add_impl(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return add_impl(a, b, true);
}

namespace {

LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool negate_b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch, "series over different fields");
  const std::int64_t prec = std::min(a.prec(), b.prec());
  std::vector<std::pair<std::int64_t, FFElem>> terms = a.terms();
  for (auto [e, c] : b.terms()) terms.emplace_back(e, negate_b ? -c : c);
  return LaurentSeries::from_terms(a.field(), terms, prec);
}

}  // namespace

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require(a.field_ == b.field_, ErrorCode::FieldMismatch, "series over different fields");
  // An unknown valuation is only bounded below by the precision.
  const std::int64_t va = a.val_, vb = b.val_;
  const std::int64_t prec = std::min(a.prec_ + vb, b.prec_ + va);
  if (a.is_zero() || b.is_zero()) return LaurentSeries(a.field_, prec);
  const std::int64_t start = va + vb;
  if (start >= prec) return LaurentSeries(a.field_, prec);
  const auto n = static_cast<std::size_t>(prec - start);
  std::vector<FFElem> out(n, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentSeries(a.field_, start, std::move(out), prec);
}

LaurentSeries LaurentSeries::scale(const FFElem& c) const {
  require(c.field() == field_, ErrorCode::FieldMismatch, "scalar from another field");
  if (c.is_zero()) return LaurentSeries(field_, prec_);
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries LaurentSeries::shift(std::int64_t k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::plus_constant(const FFElem& c) const {
  return *this + monomial(c, 0, prec_);
}

LaurentSeries LaurentSeries::inverse() const {
  const std::int64_t v = require_valuation();
  const std::size_t n = coeffs_.size();
  const FFElem u0_inv = coeffs_[0].inverse();
  std::vector<FFElem> b(n, field_->zero());
  b[0] = u0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    FFElem acc = field_->zero();
    for (std::size_t j = 1; j <= k; ++j)
      if (!coeffs_[j].is_zero()) acc += coeffs_[j] * b[k - j];
    b[k] = -(u0_inv * acc);
  }
  return LaurentSeries(field_, -v, std::move(b), prec_ - 2 * v);
}

LaurentSeries LaurentSeries::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  const std::int64_t v = require_valuation();
  LaurentSeries result = monomial(field_->one(), 0, prec_ - v);
  LaurentSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = field_->p();
  std::vector<std::pair<std::int64_t, FFElem>> t;
  for (const auto& [e, c] : terms()) t.emplace_back(e * p, c.pow(p));
  return from_terms(field_, t, prec_ * p);
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner,
                                     std::optional<std::int64_t> cap) const {
  require(inner.field_ == field_, ErrorCode::FieldMismatch, "series over different fields");
  const std::int64_t w = inner.require_valuation();
  require(w >= 1, ErrorCode::InvalidArgument,
          "substitution needs an inner series of positive valuation");
  std::int64_t limit = prec_ * w;
  if (cap) limit = std::min(limit, *cap);
  if (is_zero()) return LaurentSeries(field_, limit);
  const std::int64_t v = val_;
  // f(g) = g^v H(g) + O(g^prec), with H needed to relative precision rel.
  const std::int64_t rel = limit - v * w;
  if (rel <= 0) return LaurentSeries(field_, limit);
  const std::int64_t n = std::min<std::int64_t>(static_cast<std::int64_t>(coeffs_.size()),
                                                (rel + w - 1) / w);
  const LaurentSeries g = inner.truncate(inner.val_ + rel);
  LaurentSeries acc = monomial(coeffs_[static_cast<std::size_t>(n - 1)], 0, rel);
  for (std::int64_t j = n - 2; j >= 0; --j)
    acc = (acc * g).truncate(rel) + monomial(coeffs_[static_cast<std::size_t>(j)], 0, rel);
  LaurentSeries result = v == 0 ? acc : acc * g.pow(v);
  return result.truncate(limit);
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<std::pair<std::int64_t, FFElem>> t;
  for (const auto& [e, c] : terms())
    t.emplace_back(e - 1, c * field_->element(e));
  return from_terms(field_, t, prec_ - 1);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  const std::int64_t hi = std::min(prec_, other.prec_);
  const std::int64_t lo = std::min(val_, other.val_);
  for (std::int64_t e = lo; e < hi; ++e)
    if (!(coeff(e) == other.coeff(e))) return false;
  return true;
}

std::vector<std::pair<std::int64_t, FFElem>> LaurentSeries::terms() const {
  std::vector<std::pair<std::int64_t, FFElem>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(val_ + static_cast<std::int64_t>(i), coeffs_[i]);
  return out;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*s^" << e;
  }
  if (!first) os << " + ";
  os << "O(s^" << prec_ << ")";
  return os.str();
}

}  // namespace eqdef
