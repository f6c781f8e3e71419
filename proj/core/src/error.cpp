#include "lindeg/error.hpp"

namespace lindeg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonRealizable: return "NonRealizable";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
    case ErrorCode::WrongDims: return "WrongDims";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::FieldError: return "FieldError";
  }
  return "Unknown";
}

}  // namespace lindeg
