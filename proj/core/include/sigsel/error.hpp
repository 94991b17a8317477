#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigsel {

enum class ErrorKind {
  InvalidArgument,
  EmptySeries,
  LengthMismatch,
  NonFiniteValue,
  ZeroRange,
  ZeroVariance,
  TooShort,
  AttributeMismatch,
  CoverageGap,
  OutOfRange,
  EmptyWorkload,
  TrialTooLong,
  TooFewWorkloads,
  EmptyPlan,
  SignatureTooShort,
  ZeroSignatureValue,
  NoAttributes,
  NotPermutation,
  HorizonMismatch,
  WindowMismatch,
  MissingCapacity,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. kind() is stable and is what callers
// (and the CLI exit-code mapping) switch on; what() is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  // I/O and input-format failures, as opposed to domain validation failures.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::Io || kind_ == ErrorKind::ParseError;
  }

 private:
  ErrorKind kind_;
};

class CoverageGapError : public Error {
 public:
  explicit CoverageGapError(std::vector<std::int64_t> gaps);

  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }

 private:
  std::vector<std::int64_t> gaps_;
};

}  // namespace sigsel
