#include "eqdef/error.hpp"

namespace eqdef {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::BadCanonicalDegree: return "BadCanonicalDegree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BasisNotStable: return "BasisNotStable";
    case ErrorCode::ConsistencyError: return "ConsistencyError";
    case ErrorCode::NotHasseArf: return "NotHasseArf";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotCyclicOrderP: return "NotCyclicOrderP";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NotWeaklyRamified: return "NotWeaklyRamified";
    case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorCode::Unramified: return "Unramified";
    case ErrorCode::MissingPhi: return "MissingPhi";
    case ErrorCode::AlphaNotInjective: return "AlphaNotInjective";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NonNegativeValuation: return "NonNegativeValuation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotWeaklyRamifiedAction: return "NotWeaklyRamifiedAction";
    case ErrorCode::NoOddPoleNumber: return "NoOddPoleNumber";
    case ErrorCode::NotRamifiedHere: return "NotRamifiedHere";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
  }
  return "Unknown";
}

bool is_precondition(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotPrime:
    case ErrorCode::FieldMismatch:
    case ErrorCode::InvalidFiltration:
    case ErrorCode::NonIntegralGenus:
    case ErrorCode::BadCanonicalDegree:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::BasisNotStable:
    case ErrorCode::ConsistencyError:
      return false;
    default:
      return true;
  }
}

}  // namespace eqdef
