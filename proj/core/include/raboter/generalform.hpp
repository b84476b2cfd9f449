#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raboter/closedform.hpp"
#include "raboter/polynomial.hpp"

namespace raboter {

/// coefficient(b) * growth_base(b)^k
struct GeneralTerm {
  RationalFunction coefficient;
  Polynomial growth_base;

  friend bool operator==(const GeneralTerm&, const GeneralTerm&) = default;
};

/// An expression for L(p, b, k) in both b and k. Guessed from finitely many
/// bases, so it is always reported as a conjecture.
class GeneralForm {
 public:
  GeneralForm(unsigned power, std::vector<GeneralTerm> terms, std::vector<unsigned> b_values = {},
              std::vector<unsigned> excluded_b_values = {});

  unsigned power() const noexcept { return power_; }
  std::span<const GeneralTerm> terms() const noexcept { return terms_; }
  /// Bases the form was fitted and validated against.
  std::span<const unsigned> b_values() const noexcept { return b_values_; }
  /// Bases from the requested range where a coefficient has a pole; the
  /// closed form there has a different shape (e.g. k * 3^k at b = 2, p >= 3).
  std::span<const unsigned> excluded_b_values() const noexcept { return excluded_b_values_; }
  static constexpr std::string_view status() noexcept { return "conjecture"; }

  /// Plugs in b, merging families that land on the same integer.
  /// Throws excluded-base when a coefficient's denominator vanishes at b.
  ExponentialForm specialize(unsigned b) const;

  std::string to_string() const;

  friend bool operator==(const GeneralForm&, const GeneralForm&) = default;

 private:
  unsigned power_;
  std::vector<GeneralTerm> terms_;
  std::vector<unsigned> b_values_;
  std::vector<unsigned> excluded_b_values_;
};

/// b, b^q - 1 and b^q + b - 1 for q = 1..p, deduplicated, ascending in the
/// asymptotic order.
std::vector<Polynomial> base_families(unsigned power);

/// 2..max(12, 3p^2 - 7): enough bases for the coefficient degrees seen up
/// to p = 4 (numerator degree 3 at p = 2, 6 at p = 3, 15 at p = 4).
std::vector<unsigned> default_b_range(unsigned power);

inline constexpr unsigned kHeldOutPoints = 3;

/// Finds the rational function of lowest degree through `points`, solving on
/// the leading n + d + 1 points and requiring at least `held_out` further
/// points to agree. Pairs (n, d) are tried in shells of max(n, d), lower n + d
/// first. Without a cap every pair the points can support is tried.
/// Returns nullopt if nothing fits. Throws insufficient-points when not even a
/// constant can be checked, or when a pair within an explicit cap could not be
/// tried for lack of points.
std::optional<RationalFunction> fit_rational_function(std::span<const std::pair<Rational, Rational>> points,
                                                      std::optional<unsigned> degree_cap,
                                                      unsigned held_out = kHeldOutPoints);

/// Proves the closed form at every b in b_values, reads off the coefficient
/// of each base family, and interpolates it as a rational function of b.
/// Bases where two families coincide are left out of the fit and used only
/// as a check after specialization; bases where the guessed coefficients have
/// a pole are reported in excluded_b_values(). Without a degree cap the fit
/// goes as high as the points allow.
GeneralForm guess_general_form(unsigned power, std::span<const unsigned> b_values,
                               std::optional<unsigned> degree_cap = std::nullopt);

}  // namespace raboter
