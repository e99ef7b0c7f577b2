#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circiso {

enum class ErrorCode {
  ZeroJump,
  NotAUnit,
  OrderMismatch,
  NotBijective,
  InvalidParams,
  NotMultipleOfM,
  DegeneratePair,
  InvalidIndex,
  Intractable,
  BudgetExceeded,
  Parse,
  Io,
  Usage,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circiso
