#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "output_record.hpp"
#include "raboter/closedform.hpp"
#include "raboter/digits.hpp"
#include "raboter/error.hpp"
#include "raboter/generalform.hpp"
#include "raboter/recurrence.hpp"

namespace rabot {

using nlohmann::json;
using raboter::Natural;

CliEnvironment CliEnvironment::from_process() {
  CliEnvironment env;
  if (const char* cap = std::getenv("RABOT_ENUM_CAP")) {
    try {
      env.enumeration_cap = std::stoull(cap);
    } catch (const std::exception&) {
      // Unparsable values leave the default in place.
    }
  }
  env.partitions = std::max(1u, std::thread::hardware_concurrency());
  env.oeis_transport = raboter::oeis::http_transport("https://oeis.org");
  return env;
}

Natural recurrence_moment(const raboter::MomentQuery& query) {
  query.validate();
  auto table = raboter::compute_moments(query.base, query.power, query.k);
  return table.moment(query.power, query.k, query.last_digit);
}

namespace {

struct Options {
  bool json = false;
  bool verbose = false;

  unsigned base = 0;
  std::string value;

  unsigned power = 0;
  unsigned k = 1;
  std::optional<unsigned> last_digit;
  std::string engine = "recurrence";

  unsigned depth = 0;

  unsigned b_min = 2;
  std::optional<unsigned> b_max;
  std::optional<unsigned> degree_cap;

  unsigned k_max = 1;
  bool oeis = false;
  std::size_t oeis_limit = 5;

  unsigned p_max = 3;
};

std::string render_digits(const raboter::DigitString& d) {
  if (d.empty()) {
    return "(empty)";
  }
  std::string text;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.base() > 10 && i > 0) {
      text += '.';
    }
    text += std::to_string(d.digits()[i]);
  }
  return text;
}

json integer_result(const Natural& value) { return {{"type", "integer"}, {"value", raboter::to_string(value)}}; }

json form_json(const raboter::ExponentialForm& form) {
  json terms = json::array();
  for (const auto& t : form.terms()) {
    terms.push_back({{"coefficient", raboter::to_string(t.coefficient)},
                     {"growth_base", raboter::to_string(t.growth_base)},
                     {"k_power", t.k_power}});
  }
  return terms;
}

json polynomial_json(const raboter::Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) {
    coeffs.push_back(raboter::to_string(c));
  }
  return coeffs;
}

std::string inputs_label(unsigned base, unsigned power) {
  return "L(" + std::to_string(power) + "," + std::to_string(base) + ",k)";
}

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err, const CliEnvironment& env)
      : opts_(opts), out_(out), err_(err), env_(env) {}

  int eval() {
    raboter::require_base(opts_.base);
    Natural n = raboter::parse_integer(opts_.value);
    auto digits = raboter::DigitString::from_value(opts_.base, n);
    auto reduced = raboter::raboter(digits);
    Natural r = reduced.value();

    OutputRecord record{"eval", {{"base", std::to_string(opts_.base)}, {"n", raboter::to_string(n)}},
                        integer_result(r), RecordStatus::exact};
    if (opts_.verbose) {
      record.result["digits"] = std::vector<unsigned>(digits.digits().begin(), digits.digits().end());
      record.result["reduced"] = std::vector<unsigned>(reduced.digits().begin(), reduced.digits().end());
      if (!opts_.json) {
        out_ << "digits:  " << render_digits(digits) << " (base " << opts_.base << ")\n";
        out_ << "reduced: " << render_digits(reduced) << '\n';
      }
    }
    return emit(record, raboter::to_string(r));
  }

  int sum() {
    raboter::MomentQuery query{opts_.base, opts_.power, opts_.k, opts_.last_digit};
    query.validate();
    OutputRecord record{"sum", query_inputs(query), {}, RecordStatus::exact};
    record.inputs["engine"] = opts_.engine;

    if (opts_.engine == "recurrence") {
      Natural value = env_.recurrence_engine(query);
      record.result = integer_result(value);
      return emit(record, raboter::to_string(value));
    }
    if (opts_.engine == "brute") {
      Natural value = brute(query);
      record.result = integer_result(value);
      return emit(record, raboter::to_string(value));
    }
    Natural fast = env_.recurrence_engine(query);
    Natural slow = brute(query);
    const bool agree = fast == slow;
    record.result = integer_result(fast);
    record.result["recurrence"] = raboter::to_string(fast);
    record.result["brute"] = raboter::to_string(slow);
    record.result["agree"] = agree;
    std::string text = raboter::to_string(fast);
    if (opts_.verbose || !agree) {
      text += "\nrecurrence=" + raboter::to_string(fast) + " brute=" + raboter::to_string(slow);
    }
    text += agree ? "\nengines agree" : "\nENGINES DISAGREE";
    emit(record, text);
    if (!agree) {
      err_ << "error: recurrence and brute-force engines disagree\n";
      return kExitEngineDisagreement;
    }
    return kExitOk;
  }

  int closed_form() {
    raboter::require_base(opts_.base);
    require_positive_power();
    auto result = raboter::sum_powers(opts_.base, opts_.power, opts_.depth);
    const auto& verdict = result.verdict;

    json r{{"type", "formula"},
           {"terms", form_json(result.form)},
           {"rendered", result.form.to_string()},
           {"verdict", {{"status", raboter::to_string(verdict.status)}, {"checked_depth", verdict.checked_depth}}}};
    if (verdict.witness) {
      r["verdict"]["witness"] = {{"k", verdict.witness->k},
                                 {"expected", raboter::to_string(verdict.witness->expected)},
                                 {"actual", raboter::to_string(verdict.witness->actual)}};
    }
    RecordStatus status = verdict.status == raboter::VerdictStatus::proven    ? RecordStatus::proven
                          : verdict.status == raboter::VerdictStatus::refuted ? RecordStatus::refuted
                                                                               : RecordStatus::conjecture;
    OutputRecord record{"closed-form",
                        {{"base", std::to_string(opts_.base)}, {"power", std::to_string(opts_.power)}},
                        std::move(r),
                        status};
    if (opts_.depth > 0) {
      record.inputs["depth"] = std::to_string(opts_.depth);
    }
    std::ostringstream text;
    text << inputs_label(opts_.base, opts_.power) << " = " << result.form.to_string() << '\n';
    text << "verdict: " << raboter::to_string(verdict.status) << " (checked k = 1.." << verdict.checked_depth << ')';
    if (verdict.witness) {
      text << "\nwitness: k=" << verdict.witness->k << " expected " << raboter::to_string(verdict.witness->expected)
           << " got " << raboter::to_string(verdict.witness->actual);
    }
    emit(record, text.str());
    return verdict.status == raboter::VerdictStatus::proven ? kExitOk : kExitFitFailure;
  }

  int general_form() {
    require_positive_power();
    std::vector<unsigned> range;
    const unsigned b_max = opts_.b_max.value_or(raboter::default_b_range(opts_.power).back());
    for (unsigned b = opts_.b_min; b <= b_max; ++b) {
      range.push_back(b);
    }
    if (range.empty()) {
      throw raboter::Error(raboter::ErrorCode::invalid_argument, "empty b range");
    }
    auto form = raboter::guess_general_form(opts_.power, range, opts_.degree_cap);

    json terms = json::array();
    for (const auto& t : form.terms()) {
      terms.push_back({{"coefficient",
                        {{"numerator", polynomial_json(t.coefficient.numerator())},
                         {"denominator", polynomial_json(t.coefficient.denominator())}}},
                       {"growth_base", polynomial_json(t.growth_base)}});
    }
    OutputRecord record{"general-form",
                        {{"power", std::to_string(opts_.power)},
                         {"b_min", std::to_string(range.front())},
                         {"b_max", std::to_string(range.back())}},
                        {{"type", "general_formula"}, {"terms", terms}, {"rendered", form.to_string()}},
                        RecordStatus::conjecture};
    std::ostringstream text;
    text << "conjectured: L(" << opts_.power << ",b,k) = " << form.to_string() << '\n';
    text << "fitted over b = " << range.front() << ".." << range.back();
    if (!form.excluded_b_values().empty()) {
      json excluded = json::array();
      text << "\nexcluded (pole in a coefficient): b =";
      for (unsigned b : form.excluded_b_values()) {
        text << ' ' << b;
        excluded.push_back(b);
      }
      record.result["excluded_b"] = excluded;
    }
    return emit(record, text.str());
  }

  int seq() {
    raboter::require_base(opts_.base);
    if (opts_.k_max < 1) {
      throw raboter::Error(raboter::ErrorCode::invalid_argument, "--kmax must be at least 1");
    }
    auto table = raboter::compute_moments(opts_.base, opts_.power, opts_.k_max);
    std::vector<Natural> values = table.sequence(opts_.power);

    json list = json::array();
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
      list.push_back(raboter::to_string(values[i]));
      text += (i > 0 ? "," : "") + raboter::to_string(values[i]);
    }
    OutputRecord record{"seq",
                        {{"base", std::to_string(opts_.base)},
                         {"power", std::to_string(opts_.power)},
                         {"kmax", std::to_string(opts_.k_max)}},
                        {{"type", "sequence"}, {"values", list}},
                        RecordStatus::exact};
    if (opts_.oeis) {
      record.inputs["oeis"] = "true";
      raboter::oeis::Client client(env_.oeis_transport);
      auto lookup = client.lookup(values, opts_.oeis_limit);
      json matches = json::array();
      for (const auto& m : lookup.matches) {
        matches.push_back({{"id", m.id}, {"name", m.name}});
      }
      record.result["oeis"] = {{"fetched", lookup.fetched}, {"matches", matches}};
      if (!lookup.fetched) {
        text += "\noeis: unavailable";
      } else if (lookup.matches.empty()) {
        text += "\noeis: no match";
      } else {
        for (const auto& m : lookup.matches) {
          text += "\noeis: " + m.id + " " + m.name;
        }
      }
    }
    return emit(record, text);
  }

  int check() {
    if (opts_.b_min < 2) {
      raboter::require_base(opts_.b_min);
    }
    const unsigned b_max = opts_.b_max.value_or(5);
    json disagreements = json::array();
    std::size_t queries = 0;
    std::ostringstream text;
    for (unsigned b = opts_.b_min; b <= b_max; ++b) {
      for (unsigned p = 0; p <= opts_.p_max; ++p) {
        for (unsigned k = 1; k <= opts_.k_max; ++k) {
          std::vector<std::optional<unsigned>> digits{std::nullopt};
          for (unsigned l = 0; l < b; ++l) {
            digits.emplace_back(l);
          }
          for (const auto& l : digits) {
            raboter::MomentQuery query{b, p, k, l};
            Natural fast = env_.recurrence_engine(query);
            Natural slow = brute(query);
            ++queries;
            if (fast != slow) {
              json entry{{"base", b}, {"power", p}, {"k", k}, {"recurrence", raboter::to_string(fast)},
                         {"brute", raboter::to_string(slow)}};
              entry["last_digit"] = l ? json(*l) : json(nullptr);
              disagreements.push_back(entry);
              text << "mismatch b=" << b << " p=" << p << " k=" << k
                   << " l=" << (l ? std::to_string(*l) : std::string("*")) << ": recurrence=" << raboter::to_string(fast)
                   << " brute=" << raboter::to_string(slow) << '\n';
            }
          }
        }
      }
    }
    OutputRecord record{"check",
                        {{"b_min", std::to_string(opts_.b_min)},
                         {"b_max", std::to_string(b_max)},
                         {"p_max", std::to_string(opts_.p_max)},
                         {"k_max", std::to_string(opts_.k_max)}},
                        {{"type", "check"}, {"queries", queries}, {"disagreements", disagreements}},
                        RecordStatus::exact};
    text << "checked " << queries << " queries: "
         << (disagreements.empty() ? "all agree" : std::to_string(disagreements.size()) + " disagree");
    emit(record, text.str());
    if (!disagreements.empty()) {
      err_ << "error: recurrence and brute-force engines disagree\n";
      return kExitEngineDisagreement;
    }
    return kExitOk;
  }

 private:
  Natural brute(const raboter::MomentQuery& query) const {
    return raboter::brute_moment_parallel(query, env_.partitions, env_.enumeration_cap);
  }

  void require_positive_power() const {
    if (opts_.power < 1) {
      throw raboter::Error(raboter::ErrorCode::invalid_argument, "--power must be at least 1");
    }
  }

  std::map<std::string, std::string> query_inputs(const raboter::MomentQuery& q) const {
    std::map<std::string, std::string> inputs{
        {"base", std::to_string(q.base)}, {"power", std::to_string(q.power)}, {"k", std::to_string(q.k)}};
    if (q.last_digit) {
      inputs["last_digit"] = std::to_string(*q.last_digit);
    }
    return inputs;
  }

  int emit(const OutputRecord& record, const std::string& text) {
    if (opts_.json) {
      out_ << record.serialize() << '\n';
    } else {
      out_ << text << '\n';
    }
    return kExitOk;
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  const CliEnvironment& env_;
};

int exit_code_for(raboter::ErrorCode code) {
  switch (code) {
    case raboter::ErrorCode::no_fit:
    case raboter::ErrorCode::singular_system:
    case raboter::ErrorCode::excluded_base:
    case raboter::ErrorCode::insufficient_depth:
      return kExitFitFailure;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, CliEnvironment env) {
  if (!env.recurrence_engine) {
    env.recurrence_engine = recurrence_moment;
  }
  Options opts;
  CLI::App app{"Raboter moment sums: evaluation, exact sums, closed forms and general forms", "rabot"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Emit one JSON record instead of text");
  app.add_flag("-v,--verbose", opts.verbose, "Show intermediate detail");

  auto* eval = app.add_subcommand("eval", "Apply the raboter operation r(b, n)");
  eval->add_option("--base,-b", opts.base, "Base b >= 2")->required();
  eval->add_option("n", opts.value, "Non-negative integer n (arbitrary size)")->required();

  auto* sum = app.add_subcommand("sum", "Exact moment sum L(p, b, k), optionally by last digit");
  sum->add_option("--base,-b", opts.base, "Base b >= 2")->required();
  sum->add_option("--power,-p", opts.power, "Power p >= 0")->required();
  sum->add_option("--k,-k", opts.k, "Sum over (k+1)-digit numbers, k >= 1")->required();
  sum->add_option("--last-digit,-l", opts.last_digit, "Restrict to numbers ending in this digit");
  sum->add_option("--engine", opts.engine, "recurrence | brute | both")
      ->check(CLI::IsMember({"recurrence", "brute", "both"}));

  auto* closed = app.add_subcommand("closed-form", "Prove a closed form in k for fixed b and p");
  closed->add_option("--base,-b", opts.base, "Base b >= 2")->required();
  closed->add_option("--power,-p", opts.power, "Power p >= 1")->required();
  closed->add_option("--depth", opts.depth, "Check at least this many k (never fewer than the proof needs)");

  auto* general = app.add_subcommand("general-form", "Conjecture a form in b and k for fixed p");
  general->add_option("--power,-p", opts.power, "Power p >= 1")->required();
  general->add_option("--b-min", opts.b_min, "Smallest base to fit");
  general->add_option("--b-max", opts.b_max, "Largest base to fit");
  general->add_option("--degree-cap", opts.degree_cap,
                      "Degree cap for coefficient fits (default: as high as the bases allow)");

  auto* seq = app.add_subcommand("seq", "Print L(p, b, k) for k = 1..kmax");
  seq->add_option("--base,-b", opts.base, "Base b >= 2")->required();
  seq->add_option("--power,-p", opts.power, "Power p >= 0")->required();
  seq->add_option("--kmax", opts.k_max, "Last k")->required();
  seq->add_flag("--oeis", opts.oeis, "Look the sequence up on oeis.org");
  seq->add_option("--oeis-limit", opts.oeis_limit, "Matches to report");

  auto* check = app.add_subcommand("check", "Compare recurrence and brute force over a sweep");
  check->add_option("--b-min", opts.b_min, "Smallest base");
  check->add_option("--b-max", opts.b_max, "Largest base (default 5)");
  check->add_option("--p-max", opts.p_max, "Largest power (default 3)");
  check->add_option("--k-max", opts.k_max, "Largest k (default 6)")->default_val(6);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Session session(opts, out, err, env);
  try {
    if (*eval) return session.eval();
    if (*sum) return session.sum();
    if (*closed) return session.closed_form();
    if (*general) return session.general_form();
    if (*seq) return session.seq();
    if (*check) return session.check();
  } catch (const raboter::Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rabot
