#include "raboter/linalg.hpp"

#include <utility>

#include "raboter/error.hpp"

namespace raboter {

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) {
    throw Error(ErrorCode::invalid_argument, "solve expects a square system");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
      }
      std::swap(rhs[pivot], rhs[col]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = col; c < n; ++c) {
      a(col, c) *= inv;
    }
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) {
        continue;
      }
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
      }
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

std::optional<std::vector<Rational>> guess_recurrence(std::span<const Rational> sequence) {
  const std::size_t len = sequence.size();
  bool all_zero = true;
  for (const Rational& v : sequence) {
    all_zero = all_zero && v == 0;
  }
  if (all_zero) {
    return std::vector<Rational>{};
  }
  for (std::size_t order = 1; 2 * order <= len; ++order) {
    // Rows n = order..2*order-1:  sum_j c[j] s[n-1-j] = s[n].
    RationalMatrix hankel(order, order);
    std::vector<Rational> rhs(order);
    for (std::size_t row = 0; row < order; ++row) {
      const std::size_t n = order + row;
      for (std::size_t j = 0; j < order; ++j) {
        hankel(row, j) = sequence[n - 1 - j];
      }
      rhs[row] = sequence[n];
    }
    auto coeffs = solve(std::move(hankel), std::move(rhs));
    if (!coeffs) {
      continue;
    }
    bool reproduces = true;
    for (std::size_t n = order; n < len && reproduces; ++n) {
      Rational predicted = 0;
      for (std::size_t j = 0; j < order; ++j) {
        predicted += (*coeffs)[j] * sequence[n - 1 - j];
      }
      reproduces = predicted == sequence[n];
    }
    if (reproduces) {
      return coeffs;
    }
  }
  return std::nullopt;
}

}  // namespace raboter
