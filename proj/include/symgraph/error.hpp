#pragma once

#include <stdexcept>
#include <string>

namespace symgraph {

enum class ErrorCode {
  DegreeMismatch,
  InvalidPermutation,
  ParseError,
  ArithmeticOverflow,
  ScanBudgetExceeded,
  NotASubgroup,
  UnknownGroup,
  OrderMismatch,
  UnsupportedConstruction,
  AmbientTooLarge,
  PreconditionN7,
  TooLarge,
  StabilizerOrderNotDivisibleBy7,
  InvolutionConditionFailed,
  VertexBudgetExceeded,
  Irregular,
  UnknownClaim,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace symgraph
