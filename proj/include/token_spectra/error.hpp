#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace token_spectra {

enum class ErrorCode {
  InvalidParameter,
  DuplicateEdge,
  SelfLoop,
  OutOfRange,
  SizeMismatch,
  EdgeOverlap,
  InvalidSpec,
  NotATree,
  TooFewComponents,
  InvalidChord,
  WrongCardinality,
  KOutOfRange,
  CapExceeded,
  LengthMismatch,
  NoConvergence,
  TooSmall,
  ZeroVector,
  NonIntegerInput,
  ZeroDivisorPolynomial,
  EdgeExists,
  MalformedEdgeSet,
  ParseError,
  Cancelled,
};

std::string_view to_string(ErrorCode code) noexcept;

// Raised for malformed inputs and resource limits. Mathematical failures of a
// check are reported through a Certificate instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace token_spectra
