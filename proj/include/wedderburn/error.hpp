#pragma once

#include <stdexcept>
#include <string>

namespace wedderburn {

/// Machine-readable failure categories. Domain errors carry one of these so
/// the CLI can report them as structured JSON.
enum class ErrorKind {
  NonBijective,
  OrderBoundExceeded,
  InvalidTable,
  UnknownName,
  BadParams,
  NonCoprime,
  ZeroInput,
  NotMonic,
  DivisionByZero,
  LiftVerificationFailed,
  CountMismatch,
  CoercionFailed,
  VerificationFailed,
  NotScalarMultiple,
  PrimitiveElementSearchExhausted,
  SearchBudgetExhausted,
  NotAPci,
  NotInCenter,
  ConsistencyCheckFailed,
  BadInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonBijective: return "NonBijective";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::LiftVerificationFailed: return "LiftVerificationFailed";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::CoercionFailed: return "CoercionFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::NotScalarMultiple: return "NotScalarMultiple";
    case ErrorKind::PrimitiveElementSearchExhausted: return "PrimitiveElementSearchExhausted";
    case ErrorKind::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case ErrorKind::NotAPci: return "NotAPci";
    case ErrorKind::NotInCenter: return "NotInCenter";
    case ErrorKind::ConsistencyCheckFailed: return "ConsistencyCheckFailed";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace wedderburn
