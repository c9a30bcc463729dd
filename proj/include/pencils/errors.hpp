#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pencils {

enum class ErrorKind {
  DegenerateForm,
  DegeneratePencil,
  PrecisionExhausted,
  DimensionMismatch,
  DimensionTooLarge,
  SingularVariant,
  RangeError,
  InvalidDatum,
  DivisorMeetsWeierstrass,
  InconsistentW,
  NotFound,
  NotPrimitive,
  HeightExceedsCutoff,
  EmptyStatistics,
  PreconditionViolation,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::SingularVariant: return "SingularVariant";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::DivisorMeetsWeierstrass: return "DivisorMeetsWeierstrass";
    case ErrorKind::InconsistentW: return "InconsistentW";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::HeightExceedsCutoff: return "HeightExceedsCutoff";
    case ErrorKind::EmptyStatistics: return "EmptyStatistics";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every module; `kind()` is the machine-readable tag
/// that the CLI reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pencils
