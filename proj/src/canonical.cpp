#include "eqdef/canonical.hpp"

#include <string>

#include "eqdef/error.hpp"

namespace eqdef {

RamificationDivisor ramification_divisor(const CoverPtr& cover) {
  OrbitDivisor r(cover), red(cover);
  for (std::size_t j = 0; j < cover->r(); ++j) {
    r.set(j, cover->orbit(j).different());
    red.set(j, 1);
  }
  return {std::move(r), std::move(red)};
}

OrbitDivisor canonical_divisor_x(const CoverPtr& cover, const QuotientDivisor& k_y) {
  const std::int64_t expected = 2 * cover->genus_quotient() - 2;
  require(k_y.degree() == expected, ErrorCode::BadCanonicalDegree,
          "deg K_Y = " + std::to_string(k_y.degree()) + " but 2g_Y - 2 = " +
              std::to_string(expected));
  OrbitDivisor k_x = pullback(cover, k_y) + ramification_divisor(cover).r;
  require(k_x.degree() == 2 * genus_x(*cover) - 2, ErrorCode::ConsistencyError,
          "canonical divisor on X has the wrong degree");
  return k_x;
}

OrbitDivisor effective_canonical(const CoverPtr& cover,
                                 const std::optional<QuotientDivisor>& div_phi) {
  require(cover->p() > 3, ErrorCode::SmallCharacteristic,
          "effective canonical divisor construction assumes p > 3");
  require(cover->r() >= 1, ErrorCode::Unramified,
          "effective canonical divisor construction assumes pi is ramified");
  QuotientDivisor k_y;
  if (cover->genus_quotient() == 0) {
    require(!div_phi.has_value(), ErrorCode::InvalidArgument,
            "div(phi) is only supplied when g_Y >= 1");
    if (cover->r() == 1) {
      k_y.set(std::size_t{0}, -2);
    } else {
      k_y.set(std::size_t{0}, -1);
      k_y.set(std::size_t{1}, -1);
    }
  } else {
    require(div_phi.has_value(), ErrorCode::MissingPhi,
            "g_Y >= 1 needs div(phi) of a holomorphic differential on Y");
    for (const auto& [key, n] : div_phi->coeffs()) {
      require(std::holds_alternative<std::string>(key), ErrorCode::InvalidArgument,
              "zeroes of phi must avoid the branch points (got " + to_string(key) + ")");
      require(n > 0, ErrorCode::InvalidArgument, "phi must be holomorphic");
    }
    k_y = *div_phi;
  }
  OrbitDivisor d = canonical_divisor_x(cover, k_y);
  for (const auto& [key, n] : d.coeffs())
    require(n >= 0, ErrorCode::NotEffective,
            "coefficient " + std::to_string(n) + " at orbit " + to_string(key) +
                " is negative");
  for (std::size_t j = 0; j < cover->r(); ++j)
    require(d.coefficient(j) > 0, ErrorCode::NotEffective,
            "support misses ramified orbit " + std::to_string(j));
  return d;
}

}  // namespace eqdef
