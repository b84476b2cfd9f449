#include "raboter/recurrence.hpp"

#include <string>

#include "raboter/error.hpp"

namespace raboter {

MomentTable::MomentTable(unsigned base, unsigned max_power)
    : base_(base), max_power_(max_power), binomial_(binomial_table(max_power)) {
  require_base(base);
  base_powers_.reserve(max_power + 1);
  for (unsigned q = 0; q <= max_power; ++q) {
    base_powers_.push_back(pow(base, q));
  }
  digit_powers_.resize(base);
  for (unsigned l = 0; l < base; ++l) {
    for (unsigned i = 0; i <= max_power; ++i) {
      // mpz_ui_pow_ui gives 0^0 = 1.
      digit_powers_[l].push_back(pow(l, i));
    }
  }
}

MomentTable MomentTable::seed(unsigned base, unsigned max_power) {
  MomentTable table(base, max_power);
  const unsigned stride = max_power + 1;
  Layer first{std::vector<Natural>(stride, 0), std::vector<Natural>(base * stride, 0)};
  // Two-digit numbers "d l": r = l when d == l, otherwise the empty string.
  for (unsigned l = 0; l < base; ++l) {
    first.by_last[l * stride] = base - 1;
    for (unsigned q = 1; q <= max_power; ++q) {
      first.by_last[l * stride + q] = l == 0 ? Natural(0) : table.digit_powers_[l][q];
    }
  }
  for (unsigned q = 0; q <= max_power; ++q) {
    for (unsigned l = 0; l < base; ++l) {
      first.total[q] += first.by_last[l * stride + q];
    }
  }
  table.layers_.push_back(std::move(first));
  return table;
}

void MomentTable::extend_to(unsigned new_max_k) {
  const unsigned stride = max_power_ + 1;
  Integer term;
  while (max_k() < new_max_k) {
    const Layer& prev = layers_.back();
    Layer next{std::vector<Natural>(stride, 0), std::vector<Natural>(base_ * stride, 0)};
    for (unsigned q = 0; q <= max_power_; ++q) {
      // Appending b2 != b1 drops b2; appending b2 == b1 maps r to b*r + b1.
      Natural carried = 0;
      for (unsigned l = 0; l < base_; ++l) {
        Natural& cell = next.by_last[l * stride + q];
        cell = (base_powers_[q] - 1) * prev.by_last[l * stride + q] + prev.total[q];
        for (unsigned i = 1; i <= q; ++i) {
          term = digit_powers_[l][i] * base_powers_[q - i];
          term *= binomial_[q][i];
          term *= prev.by_last[l * stride + (q - i)];
          cell += term;
          carried += term;
        }
      }
      next.total[q] = (base_powers_[q] + base_ - 1) * prev.total[q] + carried;
    }
    layers_.push_back(std::move(next));
  }
}

const Natural& MomentTable::moment(unsigned q, unsigned k, std::optional<unsigned> last_digit) const {
  if (q > max_power_ || k < 1 || k > max_k()) {
    throw Error(ErrorCode::index_out_of_range, "moment (q=" + std::to_string(q) + ", k=" + std::to_string(k) +
                                                   ") outside table (max_power=" + std::to_string(max_power_) +
                                                   ", max_k=" + std::to_string(max_k()) + ")");
  }
  if (last_digit) {
    if (*last_digit >= base_) {
      throw Error(ErrorCode::index_out_of_range, "last digit " + std::to_string(*last_digit) + " out of range");
    }
    return by_last(*last_digit, q, k);
  }
  return total(q, k);
}

std::vector<Natural> MomentTable::sequence(unsigned q) const {
  if (q > max_power_) {
    throw Error(ErrorCode::index_out_of_range, "power " + std::to_string(q) + " outside table");
  }
  std::vector<Natural> values;
  values.reserve(max_k());
  for (unsigned k = 1; k <= max_k(); ++k) {
    values.push_back(total(q, k));
  }
  return values;
}

MomentTable extend(MomentTable table, unsigned new_max_k) {
  table.extend_to(new_max_k);
  return table;
}

MomentTable compute_moments(unsigned base, unsigned max_power, unsigned max_k) {
  if (max_k < 1) {
    throw Error(ErrorCode::invalid_argument, "max_k must be at least 1");
  }
  MomentTable table = MomentTable::seed(base, max_power);
  table.extend_to(max_k);
  return table;
}

}  // namespace raboter
