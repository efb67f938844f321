#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lelkit {

enum class ErrorCode {
  InvalidGraph,
  InvalidOrder,
  DisconnectedGraph,
  NotATree,
  OrderTooLarge,
  OrderMismatch,
  ConvergenceFailure,
  NegativeEigenvalue,
  Overflow,
  RepeatedRoots,
  NonPositiveRoot,
  ZeroEigenvalueIncluded,
  NonFiniteFunctionValue,
  NoRealSimpleRoots,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lelkit
