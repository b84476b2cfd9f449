#include "raboter/digits.hpp"

#include <algorithm>
#include <string>

#include "raboter/error.hpp"

namespace raboter {

DigitString::DigitString(unsigned base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  for (Digit d : digits_) {
    if (d >= base_) {
      throw Error(ErrorCode::invalid_digit,
                  "digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
    }
  }
}

DigitString DigitString::from_value(unsigned base, const Natural& n) {
  require_base(base);
  if (n < 0) {
    throw Error(ErrorCode::invalid_argument, "negative value " + to_string(n));
  }
  std::vector<Digit> digits;
  Natural rest = n;
  while (rest != 0) {
    unsigned long r = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base);
    digits.push_back(static_cast<Digit>(r));
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(base, std::move(digits));
}

Natural DigitString::value() const {
  Natural result = 0;
  for (Digit d : digits_) {
    result *= base_;
    result += d;
  }
  return result;
}

RunLengthForm::RunLengthForm(unsigned base, std::vector<Run> runs) : base_(base), runs_(std::move(runs)) {
  require_base(base_);
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].digit >= base_) {
      throw Error(ErrorCode::invalid_digit, "run digit out of range");
    }
    if (runs_[i].length == 0) {
      throw Error(ErrorCode::invalid_argument, "run length must be positive");
    }
    if (i > 0 && runs_[i].digit == runs_[i - 1].digit) {
      throw Error(ErrorCode::invalid_argument, "adjacent runs share a digit");
    }
  }
}

DigitString RunLengthForm::expand() const {
  std::vector<Digit> digits;
  for (const Run& run : runs_) {
    digits.insert(digits.end(), run.length, run.digit);
  }
  return DigitString(base_, std::move(digits));
}

DigitString from_value(unsigned base, const Natural& n) { return DigitString::from_value(base, n); }

Natural to_value(const DigitString& digits) { return digits.value(); }

RunLengthForm to_runs(const DigitString& digits) {
  std::vector<Run> runs;
  for (Digit d : digits.digits()) {
    if (!runs.empty() && runs.back().digit == d) {
      ++runs.back().length;
    } else {
      runs.push_back({d, 1});
    }
  }
  return RunLengthForm(digits.base(), std::move(runs));
}

DigitString raboter(const DigitString& digits) {
  std::vector<Digit> shortened;
  const RunLengthForm form = to_runs(digits);
  for (const Run& run : form.runs()) {
    shortened.insert(shortened.end(), run.length - 1, run.digit);
  }
  return DigitString(digits.base(), std::move(shortened));
}

Natural raboter(unsigned base, const Natural& n) { return raboter(DigitString::from_value(base, n)).value(); }

}  // namespace raboter
