#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcp {

enum class ErrorCode {
  EvenDimension,
  TooSmall,
  IndexOutOfRange,
  DuplicatePair,
  MissingPair,
  SelfPair,
  BadMatching,
  AxisCollision,
  DimensionMismatch,
  SchemeTensorMismatch,
  SyntaxError,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code identifies the failure
/// class; the message names the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace vcp
