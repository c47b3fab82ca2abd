#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asf {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  NotMonic,
  FieldTooLarge,
  DivisionByZero,
  ParentMismatch,
  NotAdditive,
  ZeroPolynomial,
  ElementInImage,
  NoEmbedding,
  DivisionByZeroWithinPrecision,
  BaseMismatch,
  NegativeValuation,
  InsufficientPrecision,
  InvalidArgument,
  ParseError,
  CrossCheckFailure,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code says which contract failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail = {});

}  // namespace asf
