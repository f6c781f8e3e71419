#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lindeg {

enum class ErrorCode {
  InvalidInput,
  NonRealizable,
  InvalidParams,
  LengthMismatch,
  DimMismatch,
  EmptyStratum,
  WrongDims,
  NoWitness,
  InvalidScheme,
  NotRegular,
  NegativeMultiplicity,
  GenericityFailure,
  BudgetExceeded,
  ShapeMismatch,
  NegativeCoefficient,
  NotReduced,
  NotDominant,
  FieldError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure of the library. The code is machine-readable;
/// what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lindeg
