#include "raboter/closedform.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "raboter/error.hpp"
#include "raboter/linalg.hpp"

namespace raboter {

ExponentialForm::ExponentialForm(unsigned base, unsigned power, std::vector<ExponentialTerm> terms)
    : base_(base), power_(power) {
  require_base(base);
  for (const ExponentialTerm& t : terms) {
    if (t.growth_base < 1) {
      throw Error(ErrorCode::invalid_argument, "growth base must be at least 1, got " + raboter::to_string(t.growth_base));
    }
  }
  std::sort(terms.begin(), terms.end(), [](const ExponentialTerm& a, const ExponentialTerm& b) {
    return std::tie(a.growth_base, a.k_power) < std::tie(b.growth_base, b.k_power);
  });
  for (ExponentialTerm& t : terms) {
    t.coefficient.canonicalize();
    if (!terms_.empty() && terms_.back().growth_base == t.growth_base && terms_.back().k_power == t.k_power) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const ExponentialTerm& t) { return t.coefficient == 0; });
}

Rational ExponentialForm::evaluate(unsigned k) const {
  Rational sum = 0;
  for (const ExponentialTerm& t : terms_) {
    sum += t.coefficient * Rational(pow(Integer(k), t.k_power) * pow(t.growth_base, k));
  }
  return sum;
}

std::string ExponentialForm::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const ExponentialTerm& t = terms_[i];
    if (i > 0) {
      out << " + ";
    }
    out << '(' << raboter::to_string(t.coefficient) << ")*";
    if (t.k_power == 1) {
      out << "k*";
    } else if (t.k_power > 1) {
      out << "k^" << t.k_power << '*';
    }
    out << raboter::to_string(t.growth_base) << "^k";
  }
  return out.str();
}

std::string_view to_string(VerdictStatus status) noexcept {
  switch (status) {
    case VerdictStatus::proven: return "proven";
    case VerdictStatus::consistent: return "consistent";
    case VerdictStatus::refuted: return "refuted";
  }
  return "unknown";
}

std::vector<Integer> candidate_bases(unsigned base, unsigned power) {
  require_base(base);
  std::set<Integer> bases{Integer(base)};
  for (unsigned q = 1; q <= power; ++q) {
    Integer bq = pow(base, q);
    bases.insert(bq - 1);
    bases.insert(bq + base - 1);
  }
  return {bases.begin(), bases.end()};
}

unsigned state_dimension(unsigned base, unsigned power) { return (power + 1) * (base + 1); }

std::map<Integer, unsigned> eigenvalue_multiplicities(unsigned base, unsigned power) {
  require_base(base);
  std::map<Integer, unsigned> mult;
  for (unsigned q = 0; q <= power; ++q) {
    Integer bq = pow(base, q);
    mult[bq - 1] += base;      // one per last digit
    mult[bq + base - 1] += 1;  // the total
  }
  return mult;
}

namespace {

struct Unknown {
  Integer growth_base;
  unsigned k_power;
};

// Fits sum_u c_u k^{k_power} growth_base^k on k = 1..|unknowns| and checks
// every further value.
ExponentialForm fit_terms(std::span<const Natural> values, const std::vector<Unknown>& unknowns, unsigned base,
                          unsigned power) {
  const std::size_t n = unknowns.size();
  if (values.size() < n) {
    throw Error(ErrorCode::invalid_argument, "need at least " + std::to_string(n) + " values, got " +
                                                 std::to_string(values.size()));
  }
  RationalMatrix a(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t row = 0; row < n; ++row) {
    const unsigned k = static_cast<unsigned>(row + 1);
    for (std::size_t j = 0; j < n; ++j) {
      a(row, j) = Rational(pow(Integer(k), unknowns[j].k_power) * pow(unknowns[j].growth_base, k));
    }
    rhs[row] = Rational(values[row]);
  }
  auto solution = solve(std::move(a), std::move(rhs));
  if (!solution) {
    throw Error(ErrorCode::singular_system, "closed-form system is singular");
  }
  std::vector<ExponentialTerm> terms;
  for (std::size_t j = 0; j < n; ++j) {
    terms.push_back({(*solution)[j], unknowns[j].growth_base, unknowns[j].k_power});
  }
  ExponentialForm form(base, power, std::move(terms));
  for (std::size_t i = n; i < values.size(); ++i) {
    const unsigned k = static_cast<unsigned>(i + 1);
    if (form.evaluate(k) != Rational(values[i])) {
      throw NoFitError("fitted form " + form.to_string() + " misses the value at k=" + std::to_string(k), k);
    }
  }
  return form;
}

// Coefficients of x^d - c[0] x^{d-1} - ... - c[d-1], leading first.
std::vector<Rational> characteristic_polynomial(const std::vector<Rational>& recurrence) {
  std::vector<Rational> poly{Rational(1)};
  for (const Rational& c : recurrence) {
    poly.push_back(-c);
  }
  return poly;
}

// Divides out (x - root) if it is a root; leading-first coefficients.
bool divide_root(std::vector<Rational>& poly, const Integer& root) {
  if (poly.size() < 2) {
    return false;
  }
  std::vector<Rational> quotient(poly.size() - 1);
  Rational acc = 0;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    acc = acc * Rational(root) + poly[i];
    quotient[i] = acc;
  }
  if (acc * Rational(root) + poly.back() != 0) {
    return false;
  }
  poly = std::move(quotient);
  return true;
}

}  // namespace

ExponentialForm fit_closed_form(std::span<const Natural> values, std::span<const Integer> bases, unsigned base,
                                unsigned power) {
  std::vector<Unknown> unknowns;
  for (const Integer& lambda : bases) {
    unknowns.push_back({lambda, 0});
  }
  return fit_terms(values, unknowns, base, power);
}

ExponentialForm fit_by_recurrence(std::span<const Natural> values, unsigned base, unsigned power) {
  std::vector<Rational> sequence(values.begin(), values.end());
  auto recurrence = guess_recurrence(sequence);
  if (!recurrence) {
    throw NoFitError("no linear recurrence of order <= " + std::to_string(values.size() / 2) + " reproduces the values",
                     static_cast<unsigned>(values.size()));
  }
  // The minimal polynomial of the sequence divides that of the transition,
  // so its roots are among the transition's eigenvalues.
  std::vector<Rational> poly = characteristic_polynomial(*recurrence);
  std::vector<Unknown> unknowns;
  for (const auto& [lambda, max_mult] : eigenvalue_multiplicities(base, power)) {
    unsigned mult = 0;
    while (mult < max_mult && divide_root(poly, lambda)) {
      ++mult;
    }
    if (mult > 0 && lambda == 0) {
      throw NoFitError("recurrence has a zero root; the sequence has a transient", 1);
    }
    for (unsigned j = 0; j < mult; ++j) {
      unknowns.push_back({lambda, j});
    }
  }
  if (poly.size() > 1) {
    throw NoFitError("characteristic polynomial does not split over the candidate eigenvalues",
                     static_cast<unsigned>(values.size()));
  }
  return fit_terms(values, unknowns, base, power);
}

namespace {

// Points needed on top of D: terms the transition's characteristic
// polynomial does not already annihilate raise the order of the recurrence
// the difference of the two sides satisfies.
unsigned extra_order(const ExponentialForm& form, unsigned base, unsigned power) {
  auto mult = eigenvalue_multiplicities(base, power);
  std::map<Integer, unsigned> needed;
  for (const ExponentialTerm& t : form.terms()) {
    needed[t.growth_base] = std::max(needed[t.growth_base], t.k_power + 1);
  }
  unsigned extra = 0;
  for (const auto& [lambda, count] : needed) {
    auto it = mult.find(lambda);
    unsigned available = it == mult.end() ? 0 : it->second;
    if (count > available) {
      extra += count - available;
    }
  }
  return extra;
}

}  // namespace

Verdict verify(const ExponentialForm& form, const MomentTable& table, unsigned min_depth) {
  if (table.base() != form.base() || table.max_power() < form.power()) {
    throw Error(ErrorCode::invalid_argument, "table does not cover the form's base and power");
  }
  const unsigned dimension = state_dimension(form.base(), form.power());
  if (table.max_k() < dimension) {
    throw Error(ErrorCode::insufficient_depth, "table reaches k=" + std::to_string(table.max_k()) +
                                                   ", proof needs k=" + std::to_string(dimension));
  }
  const unsigned required = std::max(dimension + extra_order(form, form.base(), form.power()), min_depth);
  const unsigned depth = std::min(required, table.max_k());
  for (unsigned k = 1; k <= depth; ++k) {
    Rational actual = form.evaluate(k);
    const Natural& expected = table.total(form.power(), k);
    if (actual != Rational(expected)) {
      return {VerdictStatus::refuted, k, Witness{k, expected, actual}};
    }
  }
  return {depth >= required ? VerdictStatus::proven : VerdictStatus::consistent, depth, std::nullopt};
}

ClosedFormResult sum_powers(unsigned base, unsigned power, unsigned min_depth) {
  require_base(base);
  const std::vector<Integer> bases = candidate_bases(base, power);
  const unsigned dimension = state_dimension(base, power);
  unsigned depth = std::max({dimension, min_depth, static_cast<unsigned>(bases.size()) + 1});
  MomentTable table = compute_moments(base, power, depth);

  std::vector<Natural> values = table.sequence(power);
  bool used_fallback = false;
  std::optional<ExponentialForm> form;
  try {
    form = fit_closed_form(values, bases, base, power);
  } catch (const NoFitError&) {
    // Repeated eigenvalues can produce k^j * lambda^k terms.
    used_fallback = true;
    table.extend_to(std::max(depth, 2 * dimension));
    values = table.sequence(power);
    form = fit_by_recurrence(values, base, power);
  }
  Verdict verdict = verify(*form, table, min_depth);
  return {std::move(*form), verdict, used_fallback};
}

}  // namespace raboter
