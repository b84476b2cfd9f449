#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raboter/arith.hpp"

namespace raboter {

using Digit = unsigned;

/// Base-b positional representation, most significant digit first.
/// Zero is the empty sequence. Leading zeros are tolerated when built from
/// explicit digits, never produced by from_value.
class DigitString {
 public:
  /// Throws invalid-base or invalid-digit.
  DigitString(unsigned base, std::vector<Digit> digits);

  static DigitString from_value(unsigned base, const Natural& n);

  unsigned base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  Natural value() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  unsigned base_;
  std::vector<Digit> digits_;
};

struct Run {
  Digit digit;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of equal digits, in order. Adjacent runs differ in digit.
class RunLengthForm {
 public:
  RunLengthForm(unsigned base, std::vector<Run> runs);

  unsigned base() const noexcept { return base_; }
  std::span<const Run> runs() const noexcept { return runs_; }

  DigitString expand() const;

  friend bool operator==(const RunLengthForm&, const RunLengthForm&) = default;

 private:
  unsigned base_;
  std::vector<Run> runs_;
};

DigitString from_value(unsigned base, const Natural& n);
Natural to_value(const DigitString& digits);
RunLengthForm to_runs(const DigitString& digits);

/// Shortens every run by one digit; runs of length one disappear.
DigitString raboter(const DigitString& digits);

/// r(b, n). Empty results read as 0, and r(b, 0) = 0.
Natural raboter(unsigned base, const Natural& n);

}  // namespace raboter
