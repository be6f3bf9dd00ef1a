#include "fparadox/error.hpp"

namespace fparadox {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DegenerateSupport: return "DEGENERATE_SUPPORT";
    case ErrorCode::Divergent: return "DIVERGENT";
    case ErrorCode::ImpossibleSequence: return "IMPOSSIBLE_SEQUENCE";
    case ErrorCode::AllIsolated: return "ALL_ISOLATED";
    case ErrorCode::TooFewPoints: return "TOO_FEW_POINTS";
    case ErrorCode::NoMaximum: return "NO_MAXIMUM";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::NonMonotone: return "NON_MONOTONE";
    case ErrorCode::Parse: return "PARSE";
  }
  return "UNKNOWN";
}

}  // namespace fparadox
