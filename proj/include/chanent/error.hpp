#pragma once

#include <stdexcept>
#include <string>

namespace chanent {

enum class ErrorCode {
  NotHermitian,
  DimensionMismatch,
  ShapeMismatch,
  NotTracePreserving,
  NotCP,
  BadRank,
  BadProbability,
  InvalidState,
  InvalidEnsemble,
  NotIsometry,
  RankMismatch,
  PureState,
  InvalidParams,
  NotOneMode,
  SchemaError,
  NumericalFailure,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotCP: return "NotCP";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::PureState: return "PureState";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotOneMode: return "NotOneMode";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace chanent
