#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "raboter/arith.hpp"

namespace raboter {

/// Univariate polynomial over Q in the base b, constant term first, with no
/// trailing zero coefficients (the zero polynomial has none at all).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, unsigned degree);

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;

  /// Rational content c such that this = c * primitive integer polynomial
  /// with positive leading coefficient.
  Rational content() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ordering by eventual size as b grows: degree first, then coefficients
  /// from the top down. b - 1 < b < 2b - 1 < b^2 - 1 < b^2 + b - 1.
  friend bool asymptotically_less(const Polynomial& a, const Polynomial& b);

  /// e.g. "b^2 + b - 1", "1/6*b^2 - 1/6*b - 1/3", "0".
  std::string to_string(char variable = 'b') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

bool asymptotically_less(const Polynomial& a, const Polynomial& b);

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// numerator / denominator in lowest terms, with the denominator a primitive
/// integer polynomial with positive leading coefficient. Two equal rational
/// functions therefore have identical representations.
class RationalFunction {
 public:
  RationalFunction() : numerator_(), denominator_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial polynomial)
      : RationalFunction(std::move(polynomial), Polynomial::constant(1)) {}

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Throws excluded-base when the denominator vanishes at x.
  Rational evaluate(const Rational& x) const;

  /// e.g. "(2*b^3 + 3*b^2 - 3*b - 2)/(6*(b^2 + b - 1))".
  std::string to_string(char variable = 'b') const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

}  // namespace raboter
