#include "raboter/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "raboter/digits.hpp"
#include "raboter/error.hpp"

namespace raboter {

void MomentQuery::validate() const {
  require_base(base);
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument, "k must be at least 1");
  }
  if (last_digit && *last_digit >= base) {
    throw Error(ErrorCode::invalid_digit,
                "last digit " + std::to_string(*last_digit) + " out of range for base " + std::to_string(base));
  }
}

Natural MomentQuery::count() const {
  // (b-1)·b^k numbers; fixing the last digit divides by b.
  return Natural(base - 1) * pow(base, last_digit ? k - 1 : k);
}

namespace {

// Enumerates the free (leading) digits of the query as an odometer. When a
// last digit is fixed it is appended after the free digits.
class Enumerator {
 public:
  Enumerator(const MomentQuery& query, std::uint64_t first_index)
      : query_(query), width_(query.last_digit ? query.k : query.k + 1) {
    Natural start = pow(query.base, width_ - 1) + Natural(std::to_string(first_index));
    DigitString leading = DigitString::from_value(query.base, start);
    digits_.assign(leading.digits().begin(), leading.digits().end());
    if (query.last_digit) {
      digits_.push_back(*query.last_digit);
    }
  }

  DigitString current() const { return DigitString(query_.base, digits_); }

  void advance() {
    for (std::size_t i = width_; i-- > 0;) {
      if (++digits_[i] < query_.base) {
        return;
      }
      digits_[i] = 0;
    }
  }

 private:
  const MomentQuery& query_;
  std::size_t width_;
  std::vector<Digit> digits_;
};

Natural sum_range(const MomentQuery& query, std::uint64_t first_index, std::uint64_t count) {
  Natural sum = 0;
  Natural term;
  Enumerator it(query, first_index);
  for (std::uint64_t i = 0; i < count; ++i) {
    Natural r = raboter(it.current()).value();
    mpz_pow_ui(term.get_mpz_t(), r.get_mpz_t(), query.power);
    sum += term;
    if (i + 1 < count) {
      it.advance();
    }
  }
  return sum;
}

std::uint64_t checked_count(const MomentQuery& query, std::uint64_t cap) {
  query.validate();
  Natural count = query.count();
  if (count > Natural(std::to_string(cap))) {
    throw Error(ErrorCode::cap_exceeded, "query covers " + to_string(count) +
                                             " numbers, enumeration cap is " + std::to_string(cap));
  }
  return std::stoull(count.get_str());
}

}  // namespace

Natural brute_moment(const MomentQuery& query, std::uint64_t cap) {
  return sum_range(query, 0, checked_count(query, cap));
}

Natural brute_moment_parallel(const MomentQuery& query, unsigned partitions, std::uint64_t cap) {
  if (partitions < 1) {
    throw Error(ErrorCode::invalid_argument, "partitions must be at least 1");
  }
  std::uint64_t total = checked_count(query, cap);
  std::uint64_t parts = std::min<std::uint64_t>(partitions, total);
  std::vector<Natural> partial(parts);
  {
    std::vector<std::jthread> workers;
    workers.reserve(parts);
    std::uint64_t begin = 0;
    for (std::uint64_t p = 0; p < parts; ++p) {
      std::uint64_t size = total / parts + (p < total % parts ? 1 : 0);
      workers.emplace_back([&query, &partial, p, begin, size] { partial[p] = sum_range(query, begin, size); });
      begin += size;
    }
  }
  Natural sum = 0;
  for (const Natural& value : partial) {
    sum += value;
  }
  return sum;
}

}  // namespace raboter
