#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbra {

enum class ErrorCode {
  ZeroConstantTerm,
  InnerConstantTerm,
  NotDeltaSeries,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  UnsupportedVariable,
  OrderTooSmall,
  IndexOutOfRange,
  NotHomogeneous,
  UnknownIdentityTag,
  DivisionByZero,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by the algebra layer. The code identifies the violated
/// precondition; what() carries a human-readable explanation.
class MathError : public std::domain_error {
 public:
  MathError(ErrorCode code, const std::string& message)
      : std::domain_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace umbra
