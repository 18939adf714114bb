#include "ipx/error.hpp"

#include <cstdlib>

#include "ipx/tolerance.hpp"

namespace ipx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InputMismatch: return "INPUT_MISMATCH";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::EmptyFamily: return "EMPTY_FAMILY";
    case ErrorCode::InvalidFamily: return "INVALID_FAMILY";
    case ErrorCode::ZeroReference: return "ZERO_REFERENCE";
    case ErrorCode::HypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case ErrorCode::RegimeMismatch: return "REGIME_MISMATCH";
    case ErrorCode::NegativeRadicand: return "NEGATIVE_RADICAND";
    case ErrorCode::BadInterval: return "BAD_INTERVAL";
    case ErrorCode::BadRadius: return "BAD_RADIUS";
    case ErrorCode::BadEpsilon: return "BAD_EPSILON";
    case ErrorCode::NotUnit: return "NOT_UNIT";
    case ErrorCode::NotUnitDensity: return "NOT_UNIT_DENSITY";
    case ErrorCode::NotNormalized: return "NOT_NORMALIZED";
    case ErrorCode::NegativeDensity: return "NEGATIVE_DENSITY";
    case ErrorCode::PathMismatch: return "PATH_MISMATCH";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownTheorem: return "UNKNOWN_THEOREM";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Tolerance Tolerance::from_env() {
  Tolerance tol;
  if (const char* raw = std::getenv("IPX_TOLERANCE")) {
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end != raw && *end == '\0' && value > 0.0) tol.eta = value;
  }
  return tol;
}

}  // namespace ipx
