#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gplab {

enum class ErrorCode {
  Overflow,
  ZeroArgument,
  EvenArgument,
  BothZero,
  NotCoprime,
  FactorizationFailure,
  ModulusTooLarge,
  BudgetExceeded,
  IntervalEmpty,
  NuOutOfRange,
  QuadratureFailure,
  EmptySet,
  BadSpec,
  DeltaZero,
  EvenModulus,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is the
// machine-readable kind and `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gplab
