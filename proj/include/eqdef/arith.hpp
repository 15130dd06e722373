#pragma once

// Small integer helpers shared by the formula modules.

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>

namespace eqdef {

/// Floor division, rounding toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// Non-negative remainder.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

constexpr std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// k with p^k == n, or nullopt when n is not a power of p.
constexpr std::optional<unsigned> exact_log(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 2) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Returns (g, x, y) with a*x + b*y == g == gcd(a, b).
constexpr std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(
    std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Binomial coefficient C(n, k) reduced mod p, for 0 <= k <= n < p^2 (Lucas).
constexpr std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k,
                                     std::uint32_t p) {
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni < p via multiplicative formula and inverses.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den^(p-2) mod p
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace eqdef
