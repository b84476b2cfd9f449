#include "raboter/arith.hpp"

#include "raboter/error.hpp"

namespace raboter {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_base: return "invalid-base";
    case ErrorCode::invalid_digit: return "invalid-digit";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::insufficient_depth: return "insufficient-depth";
    case ErrorCode::singular_system: return "singular-system";
    case ErrorCode::no_fit: return "no-fit";
    case ErrorCode::excluded_base: return "excluded-base";
    case ErrorCode::insufficient_points: return "insufficient-points";
  }
  return "unknown";
}

void require_base(unsigned base) {
  if (base < 2) {
    throw Error(ErrorCode::invalid_base, "base must be at least 2, got " + std::to_string(base));
  }
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Integer pow(unsigned long base, unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

std::vector<std::vector<Integer>> binomial_table(unsigned n) {
  std::vector<std::vector<Integer>> rows(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, Integer(1));
    for (unsigned j = 1; j < i; ++j) {
      rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
  }
  return rows;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str(10);
  }
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

bool is_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) {
    return false;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw Error(ErrorCode::invalid_argument, "not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(ErrorCode::invalid_argument, "denominator must be positive: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw Error(ErrorCode::invalid_argument, "zero denominator: '" + std::string(text) + "'");
  }
  Rational result(num, den);
  result.canonicalize();
  return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace raboter
