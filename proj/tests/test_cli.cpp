#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "cli_app.hpp"
#include "output_record.hpp"

using rabot::CliEnvironment;
using rabot::OutputRecord;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

CliEnvironment offline_env() {
  CliEnvironment env;
  env.partitions = 2;
  env.oeis_transport = [](const std::string&) -> std::optional<std::string> { return std::nullopt; };
  return env;
}

Outcome run(std::vector<std::string> args, CliEnvironment env = offline_env()) {
  std::ostringstream out, err;
  int code = rabot::run(args, out, err, std::move(env));
  return {code, out.str(), err.str()};
}

OutputRecord run_json(std::vector<std::string> args, CliEnvironment env = offline_env()) {
  args.insert(args.begin(), "--json");
  auto outcome = run(std::move(args), std::move(env));
  REQUIRE(outcome.code == 0);
  auto record = OutputRecord::parse(outcome.out);
  CHECK(OutputRecord::parse(record.serialize()) == record);
  CHECK_FALSE(std::regex_search(outcome.out, std::regex("[0-9]\\.[0-9]")));
  return record;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RABOTER_FIXTURE_DIR) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "--base", "2", "12"}).out == "2\n");
  CHECK(run({"eval", "--base", "5", "3"}).out == "0\n");
  CHECK(run({"eval", "--base", "2", "7"}).out == "3\n");
  CHECK(run({"eval", "--base", "10", "123456789012345678901234567890111"}).out == "11\n");
  auto verbose = run({"eval", "--base", "2", "12", "--verbose"});
  CHECK(verbose.out == "digits:  1100 (base 2)\nreduced: 10\n2\n");
}

TEST_CASE("usage errors exit with 2") {
  auto bad_base = run({"eval", "--base", "1", "12"});
  CHECK(bad_base.code == 2);
  CHECK(bad_base.err.find("invalid-base") != std::string::npos);
  CHECK(run({"eval", "--base", "2", "-4"}).code == 2);
  CHECK(run({"eval", "--base", "2", "abc"}).code == 2);
  CHECK(run({"eval", "12"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"sum", "--base", "2", "--power", "1", "--k", "3", "--engine", "magic"}).code == 2);
  CHECK(run({"sum", "--base", "3", "--power", "1", "--k", "3", "--last-digit", "3"}).code == 2);
  CHECK(run({"closed-form", "--base", "2", "--power", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sum") {
  CHECK(run({"sum", "--base", "2", "--power", "1", "--k", "3"}).out == "14\n");
  CHECK(run({"sum", "--base", "4", "--power", "0", "--k", "2"}).out == "48\n");
  auto both = run({"sum", "--base", "2", "--power", "2", "--k", "2", "--engine", "both"});
  CHECK(both.code == 0);
  CHECK(both.out == "10\nengines agree\n");
  CHECK(run({"sum", "--base", "2", "--power", "2", "--k", "3", "--last-digit", "1", "--engine", "brute"}).out ==
        "51\n");

  auto record = run_json({"sum", "--base", "2", "--power", "2", "--k", "2", "--engine", "both"});
  CHECK(record.result["value"] == "10");
  CHECK(record.result["brute"] == "10");
  CHECK(record.result["agree"] == true);
  CHECK(record.inputs.at("engine") == "both");
}

TEST_CASE("engine disagreement is the exit-3 path") {
  auto env = offline_env();
  env.recurrence_engine = [](const raboter::MomentQuery& q) -> raboter::Natural { return rabot::recurrence_moment(q) + 1; };
  auto outcome = run({"sum", "--base", "2", "--power", "2", "--k", "2", "--engine", "both"}, env);
  CHECK(outcome.code == 3);
  CHECK(outcome.out.find("recurrence=11 brute=10") != std::string::npos);
  // single engines never compare
  CHECK(run({"sum", "--base", "2", "--power", "2", "--k", "2"}, env).code == 0);
  CHECK(run({"check", "--b-max", "3", "--p-max", "1", "--k-max", "2"}, env).code == 3);
}

TEST_CASE("unexpected exceptions exit with 1") {
  auto env = offline_env();
  env.recurrence_engine = [](const raboter::MomentQuery&) -> raboter::Natural { throw std::bad_alloc(); };
  auto outcome = run({"sum", "--base", "2", "--power", "1", "--k", "3"}, env);
  CHECK(outcome.code == 1);
  CHECK(outcome.err.find("internal") != std::string::npos);
}

TEST_CASE("enumeration cap from the environment") {
  auto env = offline_env();
  env.enumeration_cap = 10;
  auto outcome = run({"sum", "--base", "2", "--power", "1", "--k", "4", "--engine", "brute"}, env);
  CHECK(outcome.code == 2);
  CHECK(outcome.err.find("cap-exceeded") != std::string::npos);
  CHECK(run({"sum", "--base", "2", "--power", "1", "--k", "4"}, env).code == 0);
}

TEST_CASE("closed-form") {
  auto b22 = run({"closed-form", "--base", "2", "--power", "2"});
  CHECK(b22.code == 0);
  CHECK(b22.out == "L(2,2,k) = (-1/6)*2^k + (-2/3)*3^k + (2/3)*5^k\nverdict: proven (checked k = 1..9)\n");
  CHECK(run({"closed-form", "--base", "2", "--power", "1"}).out.starts_with("L(1,2,k) = (-1/2)*2^k + (2/3)*3^k\n"));
  CHECK(run({"closed-form", "--base", "3", "--power", "1"}).out.starts_with("L(1,3,k) = (-1)*3^k + (6/5)*5^k\n"));
  CHECK(run({"closed-form", "--base", "2", "--power", "2", "--depth", "20"}).out.find("1..20") != std::string::npos);

  auto record = run_json({"closed-form", "--base", "2", "--power", "2"});
  CHECK(record.status == rabot::RecordStatus::proven);
  CHECK(record.result["verdict"]["status"] == "proven");
  CHECK(record.result["terms"][0]["coefficient"] == "-1/6");
  CHECK(record.result["terms"][2]["growth_base"] == "5");
}

TEST_CASE("general-form") {
  auto p1 = run({"general-form", "--power", "1"});
  CHECK(p1.code == 0);
  CHECK(p1.out.find("(-1/2*b + 1/2)*b^k + ((b^2 - b)/(2*b - 1))*(2*b - 1)^k") != std::string::npos);
  auto p2 = run({"general-form", "--power", "2"});
  CHECK(p2.out.starts_with("conjectured: L(2,b,k) = "));
  CHECK(p2.out.find("((2*b^3 + 3*b^2 - 3*b - 2)/(6*(b^2 + b - 1)))*(b^2 + b - 1)^k") != std::string::npos);
  CHECK(p2.out.find("fitted over b = 2..12") != std::string::npos);

  auto few = run({"general-form", "--power", "1", "--b-min", "2", "--b-max", "3"});
  CHECK(few.code == 2);
  CHECK(few.err.find("insufficient-points") != std::string::npos);
  auto capped = run({"general-form", "--power", "2", "--degree-cap", "1"});
  CHECK(capped.code == 4);
  CHECK(capped.err.find("(b - 1)^k") != std::string::npos);

  auto record = run_json({"general-form", "--power", "2"});
  CHECK(record.status == rabot::RecordStatus::conjecture);
  CHECK(record.result["terms"].size() == 4);
  CHECK(record.inputs.at("b_max") == "12");
}

TEST_CASE("seq") {
  CHECK(run({"seq", "--base", "2", "--power", "1", "--kmax", "5"}).out == "1,4,14,46,146\n");
  CHECK(run({"seq", "--base", "2", "--power", "0", "--kmax", "3"}).out == "2,4,8\n");
  CHECK(run({"seq", "--base", "3", "--power", "2", "--kmax", "4"}).out == "5,95,1249,14735\n");
  CHECK(run({"seq", "--base", "3", "--power", "2", "--kmax", "0"}).code == 2);

  auto record = run_json({"seq", "--base", "2", "--power", "1", "--kmax", "5"});
  CHECK(record.result["values"] == nlohmann::json::array({"1", "4", "14", "46", "146"}));
  CHECK_FALSE(record.result.contains("oeis"));
}

TEST_CASE("seq --oeis") {
  auto offline = run({"seq", "--base", "2", "--power", "1", "--kmax", "5", "--oeis"});
  CHECK(offline.code == 0);
  CHECK(offline.out == "1,4,14,46,146\noeis: unavailable\n");

  auto env = offline_env();
  const std::string body = read_fixture("oeis_search_1_4_14_46_146.json");
  std::string target;
  env.oeis_transport = [&](const std::string& t) -> std::optional<std::string> {
    target = t;
    return body;
  };
  auto online = run({"seq", "--base", "2", "--power", "1", "--kmax", "5", "--oeis", "--oeis-limit", "1"}, env);
  CHECK(online.out == "1,4,14,46,146\noeis: A027649 a(n) = 2*3^n - 2^n.\n");
  CHECK(target == "/search?q=1%2C4%2C14%2C46%2C146&fmt=json");

  auto record = run_json({"seq", "--base", "2", "--power", "1", "--kmax", "5", "--oeis"});
  CHECK(record.result["oeis"]["fetched"] == false);
  CHECK(record.result["oeis"]["matches"].empty());
}

TEST_CASE("check") {
  auto outcome = run({"check", "--b-max", "3", "--p-max", "2", "--k-max", "4"});
  CHECK(outcome.code == 0);
  // b=2: 3 queries per (p,k); b=3: 4
  CHECK(outcome.out == "checked 84 queries: all agree\n");
  auto record = run_json({"check", "--b-max", "3", "--p-max", "2", "--k-max", "4"});
  CHECK(record.result["queries"] == 84);
}

TEST_CASE("OutputRecord round trip and rejection") {
  OutputRecord record{"sum", {{"base", "2"}, {"k", "99"}},
                      {{"type", "integer"}, {"value", "123456789012345678901234567890"}}, rabot::RecordStatus::exact};
  CHECK(OutputRecord::parse(record.serialize()) == record);
  CHECK_THROWS_AS(OutputRecord::parse("not json"), std::invalid_argument);
  CHECK_THROWS_AS(OutputRecord::parse("{\"command\": \"x\"}"), std::invalid_argument);
  CHECK_THROWS_AS(OutputRecord::parse("{\"command\":\"x\",\"inputs\":{},\"result\":1,\"status\":\"maybe\"}"),
                  std::invalid_argument);
}
