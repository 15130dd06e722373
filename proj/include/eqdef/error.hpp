#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqdef {

enum class ErrorCode {
  // Input / validation failures.
  ParseError,
  InvalidArgument,
  NotPrime,
  FieldMismatch,
  InvalidFiltration,
  NonIntegralGenus,
  BadCanonicalDegree,
  DimensionMismatch,
  BasisNotStable,
  ConsistencyError,
  // Violated hypotheses of a formula or algorithm.
  NotHasseArf,
  NotEffective,
  NotCyclic,
  NotCyclicOrderP,
  DegreeTooSmall,
  GenusTooSmall,
  NotWeaklyRamified,
  SmallCharacteristic,
  Unramified,
  MissingPhi,
  AlphaNotInjective,
  PrecisionExhausted,
  NonNegativeValuation,
  NoConvergence,
  NotWeaklyRamifiedAction,
  NoOddPoleNumber,
  NotRamifiedHere,
  FieldTooSmall,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors meaning "the theorem/algorithm does not apply to this
/// input", as opposed to malformed or inconsistent input.
bool is_precondition(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) throw Error(code, message);
}

}  // namespace eqdef
