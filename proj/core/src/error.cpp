#include "ecloc/error.hpp"

namespace ecloc {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::InconsistentSamples: return "InconsistentSamples";
    case ErrorCode::ExceptionalPair: return "ExceptionalPair";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::DenominatorNotClearing: return "DenominatorNotClearing";
    case ErrorCode::UnsupportedExceptional: return "UnsupportedExceptional";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), message_(what) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ecloc
