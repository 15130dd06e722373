#include "eqdef/homology.hpp"

#include <string>

#include "eqdef/error.hpp"

namespace eqdef {

AlphaBeta::AlphaBeta(FieldPtr f, std::vector<FFElem> a, std::vector<FFElem> b)
    : field(std::move(f)), alpha(std::move(a)), beta(std::move(b)) {
  require(field != nullptr, ErrorCode::InvalidArgument, "null field");
  require(!alpha.empty(), ErrorCode::InvalidArgument, "rank s must be at least 1");
  require(alpha.size() == beta.size(), ErrorCode::InvalidArgument,
          "alpha and beta need one value per generator");
  for (const auto& v : alpha)
    require(v.field() == field, ErrorCode::FieldMismatch, "alpha value from another field");
  for (const auto& v : beta)
    require(v.field() == field, ErrorCode::FieldMismatch, "beta value from another field");
}

bool AlphaBeta::alpha_injective() const { return independent_over_prime_field(alpha); }

bool AlphaBeta::beta_proportional() const {
  std::optional<FFElem> c;
  for (std::size_t i = 0; i < s(); ++i) {
    if (alpha[i].is_zero()) {
      if (!beta[i].is_zero()) return false;
      continue;
    }
    const FFElem ci = beta[i] / alpha[i];
    if (!c) c = ci;
    else if (!(*c == ci)) return false;
  }
  return true;
}

std::pair<FFElem, FFElem> AlphaBeta::evaluate(
    const std::vector<std::uint32_t>& exponents) const {
  require(exponents.size() == s(), ErrorCode::InvalidArgument,
          "need one exponent per generator");
  FFElem a = field->zero(), b = field->zero();
  const FFElem two = field->element(2);
  for (std::size_t i = 0; i < s(); ++i) {
    for (std::uint32_t k = 0; k < exponents[i]; ++k) {
      b = b + two * a * alpha[i] + beta[i];
      a = a + alpha[i];
    }
  }
  return {a, b};
}

FFMatrix action_matrix(const FFElem& alpha, const FFElem& beta) {
  const FieldPtr& f = alpha.field();
  FFMatrix m = FFMatrix::identity(f, 3);
  m(0, 1) = f->element(2) * alpha;
  m(0, 2) = beta;
  m(1, 2) = alpha;
  return m;
}

namespace {

void put_block(FFMatrix& dst, std::size_t row, std::size_t col, const FFMatrix& blk) {
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = 0; j < blk.cols(); ++j) dst(row + i, col + j) = blk(i, j);
}

}  // namespace

ChainComplex build_complex(const AlphaBeta& ab) {
  const std::size_t s = ab.s();
  const FieldPtr& f = ab.field;
  const FFMatrix id = FFMatrix::identity(f, 3);
  std::vector<FFMatrix> act;
  for (std::size_t i = 0; i < s; ++i) act.push_back(action_matrix(ab.alpha[i], ab.beta[i]));

  FFMatrix d1(f, 3, 3 * s);
  for (std::size_t i = 0; i < s; ++i) put_block(d1, 0, 3 * i, act[i] - id);

  const std::size_t pairs = s * (s - 1) / 2;
  FFMatrix d2(f, 3 * s, 3 * (s + pairs));
  for (std::size_t i = 0; i < s; ++i) {
    // norm element 1 + g + ... + g^{p-1}
    FFMatrix norm(f, 3, 3), pw = id;
    for (std::uint32_t k = 0; k < ab.p(); ++k) {
      norm = norm + pw;
      pw = pw * act[i];
    }
    put_block(d2, 3 * i, 3 * i, norm);
  }
  std::size_t col = 3 * s;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      put_block(d2, 3 * i, col, act[j] - id);
      put_block(d2, 3 * j, col, id - act[i]);
      col += 3;
    }
  }
  return {std::move(d1), std::move(d2)};
}

HomologyResult homology_dims(const AlphaBeta& ab) {
  const ChainComplex c = build_complex(ab);
  const auto r1 = static_cast<std::int64_t>(matrix_rank(c.d1));
  const auto r2 = static_cast<std::int64_t>(matrix_rank(c.d2));
  const auto s = static_cast<std::int64_t>(ab.s());
  return {3 - r1, 3 * s - r1 - r2};
}

ClosedForm closed_form(const AlphaBeta& ab) {
  require(ab.alpha_injective(), ErrorCode::AlphaNotInjective,
          "alpha values are linearly dependent over F_" + std::to_string(ab.p()));
  const auto s = static_cast<std::int64_t>(ab.s());
  ClosedForm out;
  if (ab.p() > 3) {
    out.h0 = 1;
    out.h1 = s;
  } else if (ab.p() == 3) {
    out.h0 = 1;
    out.h1 = s - 1;
  }
  if (out.h0)
    out.difference = *out.h0 - *out.h1;
  else
    out.difference = ab.beta_proportional() ? 3 - 2 * s : 2 - s;
  return out;
}

AlphaBeta random_alpha_beta(std::uint32_t p, std::size_t s, BetaMode mode,
                            std::mt19937_64& rng) {
  require(s >= 1 && s <= FFElem::kMaxDegree, ErrorCode::InvalidArgument,
          "rank s out of range");
  FieldPtr f = make_field(p, static_cast<unsigned>(s));
  std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
  std::vector<FFElem> alpha;
  for (;;) {
    alpha.clear();
    for (std::size_t i = 0; i < s; ++i) alpha.push_back(f->from_code(pick(rng)));
    if (independent_over_prime_field(alpha)) break;
  }
  std::vector<FFElem> beta;
  switch (mode) {
    case BetaMode::Free:
      for (std::size_t i = 0; i < s; ++i) beta.push_back(f->from_code(pick(rng)));
      break;
    case BetaMode::Proportional: {
      const FFElem c = f->from_code(pick(rng));
      for (const auto& a : alpha) beta.push_back(c * a);
      break;
    }
    case BetaMode::Square:
      for (const auto& a : alpha) beta.push_back(a * a);
      break;
  }
  return AlphaBeta(f, std::move(alpha), std::move(beta));
}

}  // namespace eqdef
