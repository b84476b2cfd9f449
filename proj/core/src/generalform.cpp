#include "raboter/generalform.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "raboter/error.hpp"
#include "raboter/linalg.hpp"

namespace raboter {

namespace {

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorCode::invalid_argument, "expected an integer, got " + to_string(value));
  }
  return value.get_num();
}

}  // namespace

GeneralForm::GeneralForm(unsigned power, std::vector<GeneralTerm> terms, std::vector<unsigned> b_values,
                         std::vector<unsigned> excluded_b_values)
    : power_(power), b_values_(std::move(b_values)), excluded_b_values_(std::move(excluded_b_values)) {
  for (GeneralTerm& t : terms) {
    if (t.coefficient.is_zero()) {
      continue;
    }
    for (const GeneralTerm& kept : terms_) {
      if (kept.growth_base == t.growth_base) {
        throw Error(ErrorCode::invalid_argument, "duplicate growth base " + t.growth_base.to_string());
      }
    }
    terms_.push_back(std::move(t));
  }
  std::sort(terms_.begin(), terms_.end(), [](const GeneralTerm& a, const GeneralTerm& b) {
    return asymptotically_less(a.growth_base, b.growth_base);
  });
}

ExponentialForm GeneralForm::specialize(unsigned b) const {
  require_base(b);
  std::vector<ExponentialTerm> terms;
  for (const GeneralTerm& t : terms_) {
    terms.push_back({t.coefficient.evaluate(Rational(b)), to_integer(t.growth_base.evaluate(Rational(b))), 0});
  }
  return ExponentialForm(b, power_, std::move(terms));
}

std::string GeneralForm::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) {
      out << " + ";
    }
    const Polynomial& base = terms_[i].growth_base;
    out << '(' << terms_[i].coefficient.to_string() << ")*";
    if (base.degree() == 0 || base == Polynomial{0, 1}) {
      out << base.to_string() << "^k";
    } else {
      out << '(' << base.to_string() << ")^k";
    }
  }
  return out.str();
}

std::vector<Polynomial> base_families(unsigned power) {
  if (power < 1) {
    throw Error(ErrorCode::invalid_argument, "power must be at least 1");
  }
  std::vector<Polynomial> families{Polynomial{0, 1}};
  for (unsigned q = 1; q <= power; ++q) {
    families.push_back(Polynomial::monomial(1, q) - Polynomial::constant(1));
    families.push_back(Polynomial::monomial(1, q) + Polynomial{-1, 1});
  }
  std::sort(families.begin(), families.end(), asymptotically_less);
  families.erase(std::unique(families.begin(), families.end()), families.end());
  return families;
}

std::vector<unsigned> default_b_range(unsigned power) {
  std::vector<unsigned> range;
  const unsigned last = power < 3 ? 12u : std::max(12u, 3 * power * power - 7);
  for (unsigned b = 2; b <= last; ++b) {
    range.push_back(b);
  }
  return range;
}

namespace {

// Shells of max(n, d); inside a shell, smaller n + d first, then larger n.
std::vector<std::pair<unsigned, unsigned>> degree_pairs(unsigned cap) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned shell = 0; shell <= cap; ++shell) {
    std::vector<std::pair<unsigned, unsigned>> ring;
    for (unsigned other = 0; other <= shell; ++other) {
      ring.emplace_back(shell, other);
      if (other != shell) {
        ring.emplace_back(other, shell);
      }
    }
    std::sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) {
      return std::pair(a.first + a.second, b.first) < std::pair(b.first + b.second, a.first);
    });
    pairs.insert(pairs.end(), ring.begin(), ring.end());
  }
  return pairs;
}

// Numerator a_0..a_n, denominator c_0..c_{d-1} + b^d:
//   sum_j a_j x^j - y sum_{j<d} c_j x^j = y x^d
std::optional<RationalFunction> solve_pair(std::span<const std::pair<Rational, Rational>> points, unsigned n,
                                           unsigned d) {
  const std::size_t unknowns = n + d + 1;
  RationalMatrix a(unknowns, unknowns);
  std::vector<Rational> rhs(unknowns);
  for (std::size_t row = 0; row < unknowns; ++row) {
    const auto& [x, y] = points[row];
    for (unsigned j = 0; j <= n; ++j) {
      a(row, j) = pow(x, j);
    }
    for (unsigned j = 0; j < d; ++j) {
      a(row, n + 1 + j) = -y * pow(x, j);
    }
    rhs[row] = y * pow(x, d);
  }
  auto solution = solve(std::move(a), std::move(rhs));
  if (!solution) {
    return std::nullopt;
  }
  std::vector<Rational> num(solution->begin(), solution->begin() + n + 1);
  std::vector<Rational> den(solution->begin() + n + 1, solution->end());
  den.push_back(1);
  Polynomial denominator(std::move(den));
  for (const auto& [x, y] : points) {
    if (denominator.evaluate(x) == 0) {
      return std::nullopt;
    }
  }
  RationalFunction fn(Polynomial(std::move(num)), std::move(denominator));
  for (const auto& [x, y] : points) {
    if (fn.evaluate(x) != y) {
      return std::nullopt;
    }
  }
  return fn;
}

}  // namespace

std::optional<RationalFunction> fit_rational_function(std::span<const std::pair<Rational, Rational>> points,
                                                      std::optional<unsigned> degree_cap, unsigned held_out) {
  auto feasible = [&](unsigned n, unsigned d) { return n + d + 1 + held_out <= points.size(); };
  if (!feasible(0, 0)) {
    throw Error(ErrorCode::insufficient_points, std::to_string(points.size()) + " points leave fewer than " +
                                                    std::to_string(held_out) + " held out even for a constant");
  }
  // Without a cap, stop at the first shell whose smallest pair no longer fits.
  const unsigned cap = degree_cap.value_or(static_cast<unsigned>(points.size()));
  bool skipped = false;
  for (const auto& [n, d] : degree_pairs(cap)) {
    if (!feasible(n, d)) {
      skipped = true;
      if (!degree_cap && !feasible(std::max(n, d), 0)) {
        break;
      }
      continue;
    }
    if (auto fn = solve_pair(points, n, d)) {
      return fn;
    }
  }
  if (skipped && degree_cap) {
    throw Error(ErrorCode::insufficient_points,
                std::to_string(points.size()) + " points cannot determine every rational function up to degree " +
                    std::to_string(*degree_cap) + " with " + std::to_string(held_out) + " held out");
  }
  return std::nullopt;
}

GeneralForm guess_general_form(unsigned power, std::span<const unsigned> b_values,
                               std::optional<unsigned> degree_cap) {
  const std::vector<Polynomial> families = base_families(power);
  std::set<unsigned> distinct(b_values.begin(), b_values.end());
  for (unsigned b : distinct) {
    require_base(b);
  }
  const std::vector<unsigned> bs(distinct.begin(), distinct.end());

  std::vector<std::future<ClosedFormResult>> jobs;
  for (unsigned b : bs) {
    jobs.push_back(std::async(std::launch::async, [b, power] { return sum_powers(b, power); }));
  }
  std::vector<ExponentialForm> proven;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    ClosedFormResult result = jobs[i].get();
    if (result.verdict.status != VerdictStatus::proven) {
      throw NoFitError("closed form at b=" + std::to_string(bs[i]) + " is not proven", bs[i]);
    }
    proven.push_back(std::move(result.form));
  }

  // family index -> (b, coefficient) samples
  std::vector<std::vector<std::pair<Rational, Rational>>> samples(families.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Rational b(bs[i]);
    std::map<Integer, std::size_t> family_at;
    bool collides = false;
    for (std::size_t f = 0; f < families.size(); ++f) {
      collides |= !family_at.emplace(to_integer(families[f].evaluate(b)), f).second;
    }
    if (collides) {
      continue;
    }
    std::vector<Rational> coefficient(families.size(), Rational(0));
    for (const ExponentialTerm& t : proven[i].terms()) {
      auto it = family_at.find(t.growth_base);
      if (it == family_at.end() || t.k_power != 0) {
        throw NoFitError("term with growth base " + to_string(t.growth_base) + " at b=" + std::to_string(bs[i]) +
                             " belongs to no base family",
                         bs[i]);
      }
      coefficient[it->second] = t.coefficient;
    }
    for (std::size_t f = 0; f < families.size(); ++f) {
      samples[f].emplace_back(b, coefficient[f]);
    }
  }

  std::vector<GeneralTerm> terms;
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::optional<RationalFunction> fn;
    try {
      fn = fit_rational_function(samples[f], degree_cap);
    } catch (const Error& e) {
      throw Error(e.code(), e.detail() + " (coefficient of (" + families[f].to_string() + ")^k)");
    }
    if (!fn && !degree_cap) {
      throw Error(ErrorCode::insufficient_points, "the coefficient of (" + families[f].to_string() +
                                                      ")^k needs more bases than the " +
                                                      std::to_string(samples[f].size()) + " usable ones");
    }
    if (!fn) {
      throw NoFitError("no rational function of degree <= " + std::to_string(*degree_cap) +
                           " fits the coefficient of (" + families[f].to_string() + ")^k",
                       static_cast<unsigned>(f));
    }
    terms.push_back({std::move(*fn), families[f]});
  }
  // Every base, colliding or not, must reproduce its proven closed form
  // unless a coefficient has a pole there.
  GeneralForm unchecked(power, terms);
  std::vector<unsigned> fitted;
  std::vector<unsigned> excluded;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    std::optional<ExponentialForm> specialized;
    try {
      specialized = unchecked.specialize(bs[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::excluded_base) {
        throw;
      }
      excluded.push_back(bs[i]);
      continue;
    }
    if (*specialized != proven[i]) {
      throw NoFitError("guessed form disagrees with the proven closed form at b=" + std::to_string(bs[i]), bs[i]);
    }
    fitted.push_back(bs[i]);
  }
  return GeneralForm(power, std::move(terms), std::move(fitted), std::move(excluded));
}

}  // namespace raboter
