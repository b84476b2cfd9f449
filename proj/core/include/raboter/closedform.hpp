#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raboter/arith.hpp"
#include "raboter/recurrence.hpp"

namespace raboter {

/// coefficient * k^k_power * growth_base^k
struct ExponentialTerm {
  Rational coefficient;
  Integer growth_base;
  unsigned k_power = 0;

  friend bool operator==(const ExponentialTerm&, const ExponentialTerm&) = default;
};

/// A closed form in k for L(p, b, k) at fixed b and p. Terms are kept in
/// canonical order (ascending growth base, then ascending k_power), with
/// equal (base, k_power) pairs merged and zero coefficients dropped.
class ExponentialForm {
 public:
  ExponentialForm(unsigned base, unsigned power, std::vector<ExponentialTerm> terms = {});

  unsigned base() const noexcept { return base_; }
  unsigned power() const noexcept { return power_; }
  std::span<const ExponentialTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Rational evaluate(unsigned k) const;

  /// e.g. "(-1/6)*2^k + (-2/3)*3^k + (2/3)*5^k"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const ExponentialForm&, const ExponentialForm&) = default;

 private:
  unsigned base_;
  unsigned power_;
  std::vector<ExponentialTerm> terms_;
};

enum class VerdictStatus { proven, consistent, refuted };

std::string_view to_string(VerdictStatus status) noexcept;

struct Witness {
  unsigned k;
  Natural expected;
  Rational actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  VerdictStatus status;
  unsigned checked_depth;
  std::optional<Witness> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// {b} together with b^q - 1 and b^q + b - 1 for 1 <= q <= p, ascending.
/// These are the diagonal entries (self-coupling coefficients) of the
/// triangular transition that advances the moment table by one k.
std::vector<Integer> candidate_bases(unsigned base, unsigned power);

/// (p + 1)(b + 1): the size of the state vector {by_last(l,q,.), total(q,.)}
/// and so a bound on the order of the linear recurrence L(p, b, .) obeys.
unsigned state_dimension(unsigned base, unsigned power);

/// Algebraic multiplicity of each eigenvalue of that transition.
std::map<Integer, unsigned> eigenvalue_multiplicities(unsigned base, unsigned power);

/// Solves sum_j alpha_j * bases[j]^k = values[k-1] for k = 1..|bases| over Q
/// and checks the result against the remaining values. Throws NoFitError
/// carrying the first failing k, or singular-system on a degenerate basis.
ExponentialForm fit_closed_form(std::span<const Natural> values, std::span<const Integer> bases, unsigned base,
                                unsigned power);

/// Fallback for repeated roots: guesses the minimal recurrence of `values`,
/// splits its characteristic polynomial over the eigenvalue candidates and
/// fits k^j * lambda^k terms. Throws NoFitError when that fails.
ExponentialForm fit_by_recurrence(std::span<const Natural> values, unsigned base, unsigned power);

/// Checks `form` against the table. With D = state_dimension, agreement at
/// k = 1..D (plus one extra point per term multiplicity the transition does not
/// account for) proves equality for every k; agreement at fewer points is only
/// `consistent`. `min_depth` raises the number of points checked.
/// Throws insufficient-depth when the table stops short of D.
Verdict verify(const ExponentialForm& form, const MomentTable& table, unsigned min_depth = 0);

struct ClosedFormResult {
  ExponentialForm form;
  Verdict verdict;
  bool used_fallback = false;
};

/// candidate_bases -> fit_closed_form (fit_by_recurrence on failure) -> verify.
ClosedFormResult sum_powers(unsigned base, unsigned power, unsigned min_depth = 0);

}  // namespace raboter
