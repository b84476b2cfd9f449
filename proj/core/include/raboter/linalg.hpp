#pragma once

#include <optional>
#include <span>
#include <vector>

#include "raboter/arith.hpp"

namespace raboter {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Solves the square system A x = rhs by Gauss-Jordan elimination over Q.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> rhs);

/// Shortest linear recurrence s[n] = c[0] s[n-1] + ... + c[d-1] s[n-d] that
/// reproduces every term of `sequence`, found by solving successively larger
/// Hankel systems. Orders are tried up to sequence.size() / 2; returns nullopt
/// if none fits.
std::optional<std::vector<Rational>> guess_recurrence(std::span<const Rational> sequence);

}  // namespace raboter
