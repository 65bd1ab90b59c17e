#include "gplab/error.hpp"

namespace gplab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::EvenArgument: return "EvenArgument";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IntervalEmpty: return "IntervalEmpty";
    case ErrorCode::NuOutOfRange: return "NuOutOfRange";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::DeltaZero: return "DeltaZero";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gplab
