#include "raboter/polynomial.hpp"

#include <sstream>

#include "raboter/error.hpp"

namespace raboter {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::invalid_argument, "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational Polynomial::content() const {
  if (coeffs_.empty()) {
    return 0;
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const Rational& c : coeffs_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational result(num_gcd, den_lcm);
  result.canonicalize();
  return coeffs_.back() < 0 ? Rational(-result) : result;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (Rational& x : out) x *= c;
  return Polynomial(std::move(out));
}

bool asymptotically_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) {
      return a.coeffs_[i] < b.coeffs_[i];
    }
  }
  return false;
}

std::string Polynomial::to_string(char variable) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) {
      continue;
    }
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << raboter::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out << raboter::to_string(magnitude) << '*';
    }
    out << variable;
    if (i > 1) {
      out << '^' << i;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  }
  Polynomial quotient;
  Polynomial remainder = dividend;
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    Polynomial step = Polynomial::monomial(remainder.leading() / divisor.leading(),
                                           static_cast<unsigned>(remainder.degree() - divisor.degree()));
    quotient = quotient + step;
    remainder = remainder - step * divisor;
  }
  return {quotient, remainder};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) {
    return x;
  }
  return Rational(1 / x.leading()) * x;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "rational function with zero denominator");
  }
  if (numerator.is_zero()) {
    numerator_ = Polynomial();
    denominator_ = Polynomial::constant(1);
    return;
  }
  Polynomial common = gcd(numerator, denominator);
  numerator = divide(numerator, common).first;
  denominator = divide(denominator, common).first;
  Rational scale = 1 / denominator.content();
  numerator_ = scale * numerator;
  denominator_ = scale * denominator;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational den = denominator_.evaluate(x);
  if (den == 0) {
    throw Error(ErrorCode::excluded_base, "denominator " + denominator_.to_string() + " vanishes at b=" +
                                              raboter::to_string(x));
  }
  return numerator_.evaluate(x) / den;
}

std::string RationalFunction::to_string(char variable) const {
  if (denominator_.degree() == 0) {
    return numerator_.to_string(variable);
  }
  // Pull the numerator's content below the bar: (c * N)/(D) with N primitive.
  Rational c = numerator_.content();
  Polynomial primitive = Rational(1 / c) * numerator_;
  Integer scale_up = c.get_num();
  Integer scale_down = c.get_den();
  std::ostringstream out;
  if (scale_up == -1) {
    out << '-';
  } else if (scale_up != 1) {
    out << raboter::to_string(scale_up) << '*';
  }
  out << '(' << primitive.to_string(variable) << ")/(";
  if (scale_down != 1) {
    out << raboter::to_string(scale_down) << "*(" << denominator_.to_string(variable) << ')';
  } else {
    out << denominator_.to_string(variable);
  }
  out << ')';
  return out.str();
}

}  // namespace raboter
