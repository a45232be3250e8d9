#pragma once

#include <stdexcept>
#include <string>

namespace ecloc {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  NoDefaultModulus,
  DivisionByZero,
  ContextMismatch,
  NotAUnit,
  InsufficientSamples,
  InconsistentSamples,
  ExceptionalPair,
  InternalInvariantViolation,
  TooLarge,
  NotInMaximalIdeal,
  ValidationFailed,
  DenominatorNotClearing,
  UnsupportedExceptional,
  TableTooLarge,
  NoSolution,
  DegreeMismatch,
  NotOnCurve,
  NotElliptic,
  Parse,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }
  // The message without the error-name prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace ecloc
