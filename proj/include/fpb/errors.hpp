#pragma once

#include <stdexcept>
#include <string>

namespace fpb {

enum class ErrorCode {
  MixedFactors,
  OpaqueFactor,
  FiniteFactor,
  FiniteFactorBoundary,
  NotRepresentable,
  RadiusTooSmall,
  ExhaustedWindow,
  OutsideWindow,
  EqualPoints,
  SearchExhausted,
  NotInfinitelyManyEnds,
  Indeterminate,
  ParseError,
  InvalidInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MixedFactors: return "MixedFactors";
    case ErrorCode::OpaqueFactor: return "OpaqueFactor";
    case ErrorCode::FiniteFactor: return "FiniteFactor";
    case ErrorCode::FiniteFactorBoundary: return "FiniteFactorBoundary";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::ExhaustedWindow: return "ExhaustedWindow";
    case ErrorCode::OutsideWindow: return "OutsideWindow";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotInfinitelyManyEnds: return "NotInfinitelyManyEnds";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fpb
