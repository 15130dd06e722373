#pragma once

// G-invariant divisors stored per orbit, the floor-pushforward recursion for
// cyclic G, and the count of indecomposable summands of Riemann-Roch spaces.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "eqdef/cover.hpp"

namespace eqdef {

/// Names a G-orbit on X, equivalently a point of Y: either the index of a
/// branch orbit, or a label for an unramified orbit (e_0 = 1).
using OrbitKey = std::variant<std::size_t, std::string>;

std::string to_string(const OrbitKey& key);

/// A divisor on Y = X/G.
class QuotientDivisor {
 public:
  QuotientDivisor() = default;
  explicit QuotientDivisor(std::map<OrbitKey, std::int64_t> coeffs);

  std::int64_t coefficient(const OrbitKey& key) const;
  void set(const OrbitKey& key, std::int64_t n);
  const std::map<OrbitKey, std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t degree() const;

  friend bool operator==(const QuotientDivisor&, const QuotientDivisor&) = default;

 private:
  std::map<OrbitKey, std::int64_t> coeffs_;
};

/// A G-invariant divisor on X with one coefficient per orbit. Zero
/// coefficients are not stored.
class OrbitDivisor {
 public:
  explicit OrbitDivisor(CoverPtr cover, std::map<OrbitKey, std::int64_t> coeffs = {});

  const CoverPtr& cover() const noexcept { return cover_; }
  const std::map<OrbitKey, std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t coefficient(const OrbitKey& key) const;
  void set(const OrbitKey& key, std::int64_t n);

  /// e_0 of the orbit (1 for unramified labels).
  std::int64_t e0(const OrbitKey& key) const;
  std::int64_t orbit_size(const OrbitKey& key) const;
  /// Degree over X: sum of orbit_size * n.
  std::int64_t degree() const;
  bool effective() const;
  /// Sum of [P] over the support.
  OrbitDivisor reduced() const;

  OrbitDivisor operator+(const OrbitDivisor& rhs) const;
  OrbitDivisor operator*(std::int64_t k) const;

  friend bool operator==(const OrbitDivisor& a, const OrbitDivisor& b) {
    return a.cover_ == b.cover_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_key(const OrbitKey& key) const;

  CoverPtr cover_;
  std::map<OrbitKey, std::int64_t> coeffs_;
};

/// pi^* E: coefficient e_0(Q) * m_Q over each point Q.
OrbitDivisor pullback(const CoverPtr& cover, const QuotientDivisor& e);

/// Multiplicities m_1..m_{p^nu} of the indecomposables V_l of a cyclic group
/// of order p^nu in some k[G]-module.
class ModuleDecomposition {
 public:
  ModuleDecomposition(std::uint32_t p, unsigned nu, std::vector<std::int64_t> multiplicities);

  std::uint32_t p() const noexcept { return p_; }
  unsigned nu() const noexcept { return nu_; }
  /// m_l for l = 1..p^nu (index l - 1).
  const std::vector<std::int64_t>& multiplicities() const noexcept { return m_; }
  std::int64_t multiplicity(std::size_t l) const;
  /// Number of indecomposable summands.
  std::int64_t tot() const noexcept { return tot_; }
  std::int64_t dim() const noexcept { return dim_; }
  /// Multiplicity of the regular representation V_{p^nu}.
  std::int64_t free_rank() const { return m_.back(); }
  bool is_free() const;

 private:
  std::uint32_t p_;
  unsigned nu_;
  std::vector<std::int64_t> m_;
  std::int64_t tot_ = 0;
  std::int64_t dim_ = 0;
};

/// Coefficient-wise floor(n / e_0) on Y. Requires cyclic G.
QuotientDivisor floor_pushforward_closed(const OrbitDivisor& d);

/// Composite of the stepwise pushforwards through the subgroup chain of a
/// cyclic group, each step dividing by p and taking the floor at ramified
/// points. Requires cyclic G.
QuotientDivisor floor_pushforward_iterated(const OrbitDivisor& d);

/// Number of indecomposable summands of H^0(X, O_X(D)) for cyclic G and
/// deg D > 2 g_X - 2: 1 - g_Y + sum_Q floor(n_Q / e_0(Q)).
/// Throws DegreeTooSmall when the degree bound fails.
std::int64_t tot_riemann_roch(const OrbitDivisor& d);

}  // namespace eqdef
