#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fparadox {

enum class ErrorCode {
  InvalidArgument,
  DegenerateSupport,
  Divergent,
  ImpossibleSequence,
  AllIsolated,
  TooFewPoints,
  NoMaximum,
  OutOfRange,
  NonMonotone,
  Parse,
};

/// Stable upper-case identifier, e.g. "DEGENERATE_SUPPORT".
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fparadox
