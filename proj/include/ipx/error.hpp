#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipx {

enum class ErrorCode {
  InputMismatch,
  FieldMismatch,
  EmptyFamily,
  InvalidFamily,
  ZeroReference,
  HypothesisViolated,
  RegimeMismatch,
  NegativeRadicand,
  BadInterval,
  BadRadius,
  BadEpsilon,
  NotUnit,
  NotUnitDensity,
  NotNormalized,
  NegativeDensity,
  PathMismatch,
  NotFound,
  ParseError,
  UnknownTheorem,
  IoError,
};

/// Upper-snake name used in JSON output and CLI diagnostics.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ipx
