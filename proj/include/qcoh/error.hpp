#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcoh {

/// Failure categories raised by the library. The CLI prints `name(kind)`
/// alongside the message so callers can match on a stable token.
enum class ErrorKind {
  DomainError,
  PoleAtZero,
  InternalInconsistency,
  DegreeMismatch,
  OrderExceeded,
  NotSimpleSet,
  MissingCoefficient,
  RegularityViolation,
  DenominatorZero,
  RestrictionViolation,
  IdentityFailed,
  MissingData,
  IndexOutOfRange,
  DegreeClaimViolated,
  NonRationalRoot,
  DegenerateInput,
  ParseError,
};

constexpr std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::NotSimpleSet: return "NotSimpleSet";
    case ErrorKind::MissingCoefficient: return "MissingCoefficient";
    case ErrorKind::RegularityViolation: return "RegularityViolation";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::RestrictionViolation: return "RestrictionViolation";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::MissingData: return "MissingData";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeClaimViolated: return "DegreeClaimViolated";
    case ErrorKind::NonRationalRoot: return "NonRationalRoot";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcoh
