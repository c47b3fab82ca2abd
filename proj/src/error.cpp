#include "asf/error.hpp"

namespace asf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ElementInImage: return "ElementInImage";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::DivisionByZeroWithinPrecision: return "DivisionByZeroWithinPrecision";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CrossCheckFailure: return "CrossCheckFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void raise(ErrorCode code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  throw Error(code, msg);
}

}  // namespace asf
