#include "circiso/error.hpp"

namespace circiso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroJump: return "ZeroJump";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotMultipleOfM: return "NotMultipleOfM";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::Intractable: return "Intractable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace circiso
