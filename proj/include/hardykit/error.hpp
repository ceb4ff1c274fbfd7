#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hardykit {

enum class ErrorCode {
  DuplicateAtom,
  NonpositiveProb,
  EmptySupport,
  NotNormalized,
  LengthMismatch,
  OutOfRange,
  UnknownFamily,
  BadExponent,
  NegativeValue,
  NonpositivePsi,
  NotMonotone,
  RequiresGrid,
  OrderingViolated,
  SharedAtom,
  BudgetZero,
  EmptySample,
  EmptyGrid,
  BadGrid,
  NotCentered,
  BadSampleSize,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition failure in the library is reported with one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hardykit
