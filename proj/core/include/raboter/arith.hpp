#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace raboter {

/// Non-negative by contract; the type itself is a signed GMP integer.
using Natural = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
Integer pow(unsigned long base, unsigned long exponent);

/// Pascal's triangle rows 0..n, exact.
std::vector<std::vector<Integer>> binomial_table(unsigned n);

/// Decimal string, or "num/den" for non-integers. Never floating point.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Inverse of to_string; throws Error(invalid_argument) on malformed input.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

}  // namespace raboter
