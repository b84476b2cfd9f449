#pragma once

#include <optional>
#include <vector>

#include "raboter/arith.hpp"

namespace raboter {

/// Exact values of the moment sums for one base, every power q <= max_power,
/// every last digit l < base, and every k in 1..max_k:
///
///   total(q, k)      = sum of r(b,n)^q over the (k+1)-digit numbers n
///   by_last(l, q, k) = the part of total(q, k) from numbers ending in l
///
/// The q = 0 layer holds plain counts so that the binomial expansion in the
/// step never needs a special case.
class MomentTable {
 public:
  /// The k = 1 layer (two-digit numbers).
  static MomentTable seed(unsigned base, unsigned max_power);

  /// Appends layers up to new_max_k using the last-digit recurrences.
  void extend_to(unsigned new_max_k);

  unsigned base() const noexcept { return base_; }
  unsigned max_power() const noexcept { return max_power_; }
  unsigned max_k() const noexcept { return static_cast<unsigned>(layers_.size()); }

  /// Unchecked accessors; q <= max_power, 1 <= k <= max_k, l < base.
  const Natural& total(unsigned q, unsigned k) const { return layers_[k - 1].total[q]; }
  const Natural& by_last(unsigned l, unsigned q, unsigned k) const {
    return layers_[k - 1].by_last[l * (max_power_ + 1) + q];
  }

  /// Checked lookup; throws index-out-of-range.
  const Natural& moment(unsigned q, unsigned k, std::optional<unsigned> last_digit = std::nullopt) const;

  /// total(q, k) for k = 1..max_k.
  std::vector<Natural> sequence(unsigned q) const;

 private:
  struct Layer {
    std::vector<Natural> total;    // [q]
    std::vector<Natural> by_last;  // [l * (max_power + 1) + q]
  };

  MomentTable(unsigned base, unsigned max_power);

  unsigned base_;
  unsigned max_power_;
  std::vector<Layer> layers_;
  std::vector<std::vector<Integer>> binomial_;
  std::vector<Integer> base_powers_;                // b^q
  std::vector<std::vector<Integer>> digit_powers_;  // l^i
};

MomentTable extend(MomentTable table, unsigned new_max_k);

/// seed + extend_to in one call.
MomentTable compute_moments(unsigned base, unsigned max_power, unsigned max_k);

}  // namespace raboter
