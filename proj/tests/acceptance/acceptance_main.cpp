// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion carries its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "output_record.hpp"
#include "raboter/closedform.hpp"
#include "raboter/generalform.hpp"
#include "raboter/oracle.hpp"
#include "raboter/recurrence.hpp"
#include "support/reference.hpp"

using namespace raboter;
using nlohmann::json;

namespace {

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;
  std::function<std::string()> check;  // empty string means pass
};

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned b = lo; b <= hi; ++b) out.push_back(b);
  return out;
}

rabot::OutputRecord run_cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  rabot::CliEnvironment env;
  env.partitions = 2;
  std::ostringstream out, err;
  const int code = rabot::run(args, out, err, env);
  if (code != 0) {
    throw std::runtime_error("cli exit " + std::to_string(code) + ": " + err.str());
  }
  return rabot::OutputRecord::parse(out.str());
}

Polynomial polynomial_from(const json& coefficients) {
  std::vector<Rational> c;
  for (const auto& entry : coefficients) {
    c.push_back(parse_rational(entry.get<std::string>()));
  }
  return Polynomial(std::move(c));
}

std::string run_binary(const std::string& args) {
  const std::string command = std::string(RABOT_BINARY) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) {
    throw std::runtime_error("cannot launch " + command);
  }
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe.get())) {
    output.append(buffer, n);
  }
  return output;
}

std::string first_moment_base_two() {
  auto table = compute_moments(2, 1, 20);
  for (unsigned k = 1; k <= 20; ++k) {
    const Natural expected = 2 * reference::zpow(3, k - 1) - reference::zpow(2, k - 1);
    if (table.total(1, k) != expected) {
      return "mismatch at k=" + std::to_string(k);
    }
  }
  return {};
}

std::string first_moment_closed_forms() {
  for (unsigned b = 2; b <= 10; ++b) {
    auto record = run_cli_json({"closed-form", "--base", std::to_string(b), "--power", "1"});
    if (record.status != rabot::RecordStatus::proven) {
      return "b=" + std::to_string(b) + " not proven";
    }
    const Rational big(Integer(b * (b - 1)), Integer(2 * b - 1));
    const Rational small(Integer(b - 1), Integer(2));
    ExponentialForm expected(b, 1, {{-small, Integer(b)}, {big, Integer(2 * b - 1)}});
    const auto& terms = record.result["terms"];
    if (terms.size() != expected.terms().size()) {
      return "b=" + std::to_string(b) + " has " + std::to_string(terms.size()) + " terms";
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& want = expected.terms()[i];
      if (parse_rational(terms[i]["coefficient"].get<std::string>()) != want.coefficient ||
          parse_integer(terms[i]["growth_base"].get<std::string>()) != want.growth_base ||
          terms[i]["k_power"].get<unsigned>() != 0) {
        return "b=" + std::to_string(b) + " term " + std::to_string(i) + " differs";
      }
    }
  }
  return {};
}

std::string second_moment_base_two() {
  auto record = run_cli_json({"closed-form", "--base", "2", "--power", "2"});
  if (record.status != rabot::RecordStatus::proven) {
    return "verdict " + record.result["verdict"]["status"].get<std::string>();
  }
  const std::vector<std::pair<std::string, std::string>> expected{{"-1/6", "2"}, {"-2/3", "3"}, {"2/3", "5"}};
  const auto& terms = record.result["terms"];
  if (terms.size() != expected.size()) {
    return "expected three terms, got " + record.result["rendered"].get<std::string>();
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (terms[i]["coefficient"] != expected[i].first || terms[i]["growth_base"] != expected[i].second ||
        terms[i]["k_power"] != 0) {
      return "got " + record.result["rendered"].get<std::string>();
    }
  }
  return {};
}

std::string second_moment_general_form() {
  auto record = run_cli_json({"general-form", "--power", "2", "--b-min", "2", "--b-max", "12"});
  if (record.status != rabot::RecordStatus::conjecture) {
    return "status is not conjecture";
  }
  const Polynomial b_minus_1{-1, 1};
  const Polynomial b{0, 1};
  const Polynomial two_b_minus_1{-1, 2};
  const Polynomial quad{-1, 1, 1};
  const std::vector<GeneralTerm> expected{
      {RationalFunction(Polynomial{Rational(-1, 3), Rational(-1, 6), Rational(1, 6)}), b_minus_1},
      {RationalFunction(Polynomial{Rational(-1, 6), Rational(1, 3), Rational(-1, 6)}), b},
      {RationalFunction(Rational(-1) * b * b_minus_1, two_b_minus_1), two_b_minus_1},
      {RationalFunction(Polynomial{-2, -3, 3, 2}, Rational(6) * quad), quad}};
  const auto& terms = record.result["terms"];
  if (terms.size() != expected.size()) {
    return "got " + record.result["rendered"].get<std::string>();
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    RationalFunction coefficient(polynomial_from(terms[i]["coefficient"]["numerator"]),
                                 polynomial_from(terms[i]["coefficient"]["denominator"]));
    if (!(coefficient == expected[i].coefficient) || !(polynomial_from(terms[i]["growth_base"]) == expected[i].growth_base)) {
      return "term " + std::to_string(i) + " differs: " + record.result["rendered"].get<std::string>();
    }
  }
  return {};
}

std::string oracle_sweep() {
  for (unsigned b = 2; b <= 5; ++b) {
    auto table = compute_moments(b, 3, 6);
    for (unsigned p = 0; p <= 3; ++p) {
      for (unsigned k = 1; k <= 6; ++k) {
        std::vector<std::optional<unsigned>> digits{std::nullopt};
        for (unsigned l = 0; l < b; ++l) digits.emplace_back(l);
        for (const auto& l : digits) {
          const Natural slow = brute_moment_parallel({b, p, k, l}, 4);
          if (slow != table.moment(p, k, l)) {
            return "b=" + std::to_string(b) + " p=" + std::to_string(p) + " k=" + std::to_string(k);
          }
        }
      }
    }
  }
  return {};
}

std::string first_moment_recurrence() {
  for (unsigned b = 2; b <= 10; ++b) {
    auto table = compute_moments(b, 1, 20);
    for (unsigned k = 2; k <= 20; ++k) {
      const Rational lhs(table.total(1, k) - Integer(2 * b - 1) * table.total(1, k - 1));
      const Rational rhs = Rational(reference::zpow(b, k - 1) * (b - 1) * (b - 1)) / 2;
      if (lhs != rhs) {
        return "b=" + std::to_string(b) + " k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string specialization_consistency() {
  for (unsigned p = 1; p <= 2; ++p) {
    auto general = guess_general_form(p, range(2, 12));
    for (unsigned b = 2; b <= 12; ++b) {
      auto proven = sum_powers(b, p);
      if (proven.verdict.status != VerdictStatus::proven || !(general.specialize(b) == proven.form)) {
        return "p=" + std::to_string(p) + " b=" + std::to_string(b);
      }
    }
    if (p == 2 && general.specialize(2).terms().size() != 3) {
      return "b=2 p=2 did not merge to three terms";
    }
  }
  return {};
}

std::string parallel_determinism() {
  std::mt19937_64 rng(20261015);
  auto pick = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  constexpr std::uint64_t kCap = 200'000;
  for (int i = 0; i < 100; ++i) {
    const unsigned b = pick(2, 7);
    const unsigned p = pick(0, 4);
    unsigned k_max = 1;
    while ((b - 1) * reference::ipow(b, k_max + 1) <= kCap) ++k_max;
    const unsigned k = pick(1, k_max);
    std::optional<unsigned> l;
    if (pick(0, 1) == 1) l = pick(0, b - 1);
    const unsigned partitions = pick(2, 8);
    MomentQuery query{b, p, k, l};
    if (brute_moment(query, kCap) != brute_moment_parallel(query, partitions, kCap)) {
      return "query " + std::to_string(i) + " b=" + std::to_string(b) + " p=" + std::to_string(p) +
             " k=" + std::to_string(k) + " partitions=" + std::to_string(partitions);
    }
  }
  return {};
}

std::string cli_golden() {
  if (auto out = run_binary("eval --base 2 12"); out != "2\n") {
    return "eval printed '" + out + "'";
  }
  if (auto out = run_binary("seq --base 2 --power 1 --kmax 5"); out != "1,4,14,46,146\n") {
    return "seq printed '" + out + "'";
  }
  for (const char* args : {"--json eval --base 2 12", "--json seq --base 2 --power 1 --kmax 5",
                           "--json closed-form --base 2 --power 2"}) {
    auto record = rabot::OutputRecord::parse(run_binary(args));
    if (!(rabot::OutputRecord::parse(record.serialize()) == record)) {
      return std::string("round trip failed for ") + args;
    }
  }
  auto seq = rabot::OutputRecord::parse(run_binary("--json seq --base 2 --power 1 --kmax 5"));
  if (seq.result["values"] != json::array({"1", "4", "14", "46", "146"})) {
    return "json seq values differ";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "L(1,2,k) = 2*3^(k-1) - 2^(k-1) for k = 1..20", 1.0, first_moment_base_two},
      {2, "closed-form --power 1 is b(b-1)/(2b-1)*(2b-1)^k - (b-1)/2*b^k, proven, b = 2..10", 5.0,
       first_moment_closed_forms},
      {3, "closed-form --base 2 --power 2 is 2/3*5^k - 1/6*2^k - 2/3*3^k, proven", 1.0, second_moment_base_two},
      {4, "general-form --power 2 over b = 2..12 gives the four-term conjecture", 30.0, second_moment_general_form},
      {5, "brute force equals recurrence for b 2..5, p 0..3, k 1..6, every last digit", 60.0, oracle_sweep},
      {6, "total[1][k] - (2b-1)*total[1][k-1] = b^(k-1)(b-1)^2/2 for b 2..10, k 2..20", 1.0,
       first_moment_recurrence},
      {7, "specialized general form equals proven closed form, b 2..12, p 1..2", 30.0, specialization_consistency},
      {8, "parallel oracle equals serial oracle on 100 random queries", 60.0, parallel_determinism},
      {9, "CLI golden outputs and JSON round trip", 1.0, cli_golden},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && elapsed >= c.budget_seconds) {
      std::ostringstream over;
      over << "over budget of " << c.budget_seconds << " s";
      problem = over.str();
    }
    const bool ok = problem.empty();
    failures += ok ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(3) << elapsed << " s) " << c.description;
    if (!ok) {
      std::cout << " -- " << problem;
    }
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failing") << std::endl;
  return failures == 0 ? 0 : 1;
}
