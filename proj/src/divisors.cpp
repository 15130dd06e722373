#include "eqdef/divisors.hpp"

#include <numeric>

#include "eqdef/arith.hpp"
#include "eqdef/error.hpp"

namespace eqdef {

std::string to_string(const OrbitKey& key) {
  if (const auto* idx = std::get_if<std::size_t>(&key)) return std::to_string(*idx);
  return "unram:" + std::get<std::string>(key);
}

QuotientDivisor::QuotientDivisor(std::map<OrbitKey, std::int64_t> coeffs) {
  for (auto& [k, n] : coeffs) set(k, n);
}

std::int64_t QuotientDivisor::coefficient(const OrbitKey& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? 0 : it->second;
}

void QuotientDivisor::set(const OrbitKey& key, std::int64_t n) {
  if (n == 0)
    coeffs_.erase(key);
  else
    coeffs_[key] = n;
}

std::int64_t QuotientDivisor::degree() const {
  std::int64_t deg = 0;
  for (const auto& [k, n] : coeffs_) deg += n;
  return deg;
}

OrbitDivisor::OrbitDivisor(CoverPtr cover, std::map<OrbitKey, std::int64_t> coeffs)
    : cover_(std::move(cover)) {
  require(cover_ != nullptr, ErrorCode::InvalidArgument, "divisor without a cover");
  for (auto& [k, n] : coeffs) set(k, n);
}

void OrbitDivisor::check_key(const OrbitKey& key) const {
  if (const auto* idx = std::get_if<std::size_t>(&key)) {
    require(*idx < cover_->r(), ErrorCode::InvalidArgument,
            "orbit index " + std::to_string(*idx) + " out of range");
  } else {
    require(!std::get<std::string>(key).empty(), ErrorCode::InvalidArgument,
            "empty unramified point label");
  }
}

std::int64_t OrbitDivisor::coefficient(const OrbitKey& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? 0 : it->second;
}

void OrbitDivisor::set(const OrbitKey& key, std::int64_t n) {
  check_key(key);
  if (n == 0)
    coeffs_.erase(key);
  else
    coeffs_[key] = n;
}

std::int64_t OrbitDivisor::e0(const OrbitKey& key) const {
  check_key(key);
  if (const auto* idx = std::get_if<std::size_t>(&key)) return cover_->orbit(*idx).e0();
  return 1;
}

std::int64_t OrbitDivisor::orbit_size(const OrbitKey& key) const {
  return cover_->group_order() / e0(key);
}

std::int64_t OrbitDivisor::degree() const {
  std::int64_t deg = 0;
  for (const auto& [k, n] : coeffs_) deg += orbit_size(k) * n;
  return deg;
}

bool OrbitDivisor::effective() const {
  for (const auto& [k, n] : coeffs_)
    if (n < 0) return false;
  return true;
}

OrbitDivisor OrbitDivisor::reduced() const {
  OrbitDivisor r(cover_);
  for (const auto& [k, n] : coeffs_) r.set(k, 1);
  return r;
}

OrbitDivisor OrbitDivisor::operator+(const OrbitDivisor& rhs) const {
  require(cover_ == rhs.cover_, ErrorCode::InvalidArgument,
          "divisors live on different covers");
  OrbitDivisor r = *this;
  for (const auto& [k, n] : rhs.coeffs_) r.set(k, r.coefficient(k) + n);
  return r;
}

OrbitDivisor OrbitDivisor::operator*(std::int64_t k) const {
  OrbitDivisor r(cover_);
  for (const auto& [key, n] : coeffs_) r.set(key, k * n);
  return r;
}

OrbitDivisor pullback(const CoverPtr& cover, const QuotientDivisor& e) {
  OrbitDivisor d(cover);
  for (const auto& [k, n] : e.coeffs()) d.set(k, d.e0(k) * n);
  return d;
}

ModuleDecomposition::ModuleDecomposition(std::uint32_t p, unsigned nu,
                                         std::vector<std::int64_t> multiplicities)
    : p_(p), nu_(nu), m_(std::move(multiplicities)) {
  require(m_.size() == static_cast<std::size_t>(ipow(p, nu)), ErrorCode::InvalidArgument,
          "need one multiplicity per indecomposable V_1..V_{p^nu}");
  for (std::size_t l = 1; l <= m_.size(); ++l) {
    require(m_[l - 1] >= 0, ErrorCode::ConsistencyError,
            "negative multiplicity of V_" + std::to_string(l));
    tot_ += m_[l - 1];
    dim_ += static_cast<std::int64_t>(l) * m_[l - 1];
  }
}

std::int64_t ModuleDecomposition::multiplicity(std::size_t l) const {
  require(l >= 1 && l <= m_.size(), ErrorCode::InvalidArgument, "no such indecomposable");
  return m_[l - 1];
}

bool ModuleDecomposition::is_free() const {
  for (std::size_t l = 0; l + 1 < m_.size(); ++l)
    if (m_[l] != 0) return false;
  return true;
}

namespace {

void require_cyclic(const CoverData& c) {
  require(c.cyclic(), ErrorCode::NotCyclic,
          "the floor pushforward recursion needs a cyclic group G");
}

}  // namespace

QuotientDivisor floor_pushforward_closed(const OrbitDivisor& d) {
  require_cyclic(*d.cover());
  QuotientDivisor out;
  for (const auto& [k, n] : d.coeffs()) out.set(k, floor_div(n, d.e0(k)));
  return out;
}

QuotientDivisor floor_pushforward_iterated(const OrbitDivisor& d) {
  const CoverData& c = *d.cover();
  require_cyclic(c);
  const std::int64_t p = c.p();
  QuotientDivisor out;
  for (const auto& [k, n0] : d.coeffs()) {
    const unsigned kappa = *exact_log(d.e0(k), p);
    // Walk X = X_0 -> X_1 -> ... -> X_nu = Y. In step mu the point is
    // ramified iff the order-p^mu subgroup lies in its decomposition group,
    // i.e. mu <= kappa. The pushforward sums the coefficients over the
    // fibre (1 point if ramified, p points otherwise), then we divide by p.
    std::int64_t n = n0;
    for (unsigned mu = 1; mu <= c.log_order(); ++mu) {
      const std::int64_t fibre = mu <= kappa ? 1 : p;
      n = floor_div(fibre * n, p);
    }
    out.set(k, n);
  }
  return out;
}

std::int64_t tot_riemann_roch(const OrbitDivisor& d) {
  const CoverData& c = *d.cover();
  require_cyclic(c);
  const std::int64_t bound = 2 * genus_x(c) - 2;
  require(d.degree() > bound, ErrorCode::DegreeTooSmall,
          "deg D = " + std::to_string(d.degree()) + " is not greater than 2g_X - 2 = " +
              std::to_string(bound));
  return 1 - c.genus_quotient() + floor_pushforward_closed(d).degree();
}

}  // namespace eqdef
