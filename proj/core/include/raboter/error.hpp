#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace raboter {

enum class ErrorCode {
  invalid_base,
  invalid_digit,
  invalid_argument,
  cap_exceeded,
  index_out_of_range,
  insufficient_depth,
  singular_system,
  no_fit,
  excluded_base,
  insufficient_points,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Raised when a rational fit fails to reproduce the data. `failing_index` is
/// the first k (closed forms) or the offending family label (general forms).
class NoFitError : public Error {
 public:
  NoFitError(const std::string& message, unsigned failing_index)
      : Error(ErrorCode::no_fit, message), failing_index_(failing_index) {}

  unsigned failing_index() const noexcept { return failing_index_; }

 private:
  unsigned failing_index_;
};

void require_base(unsigned base);

}  // namespace raboter
