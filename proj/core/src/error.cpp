#include "lelkit/error.hpp"

namespace lelkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::RepeatedRoots: return "RepeatedRoots";
    case ErrorCode::NonPositiveRoot: return "NonPositiveRoot";
    case ErrorCode::ZeroEigenvalueIncluded: return "ZeroEigenvalueIncluded";
    case ErrorCode::NonFiniteFunctionValue: return "NonFiniteFunctionValue";
    case ErrorCode::NoRealSimpleRoots: return "NoRealSimpleRoots";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lelkit
