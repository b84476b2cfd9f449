#pragma once

#include <cstdint>
#include <optional>

#include "raboter/arith.hpp"

namespace raboter {

/// Sum of r(b,n)^p over the (k+1)-digit base-b numbers, optionally only
/// those whose last digit is `last_digit`.
struct MomentQuery {
  unsigned base = 2;
  unsigned power = 0;
  unsigned k = 1;
  std::optional<unsigned> last_digit;

  /// Throws invalid-base / invalid-argument / invalid-digit.
  void validate() const;
  /// Number of integers the query ranges over.
  Natural count() const;

  friend bool operator==(const MomentQuery&, const MomentQuery&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Direct enumeration. 0^0 = 1, so power 0 counts. Refuses with
/// cap-exceeded when the query covers more than `cap` numbers.
Natural brute_moment(const MomentQuery& query, std::uint64_t cap = kDefaultEnumerationCap);

/// Same value as brute_moment; the range is cut into `partitions` contiguous
/// pieces summed on separate threads and combined in order.
Natural brute_moment_parallel(const MomentQuery& query, unsigned partitions,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace raboter
