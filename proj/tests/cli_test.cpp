#include "cointerval/cli/scenarios.hpp"
#include "cointerval/cli/suite.hpp"
#include "cointerval/error.hpp"
#include "doctest.h"

using namespace cointerval;
using cli::SuiteConfig;
using cocat::Status;

namespace {

SuiteConfig config(std::string context, std::string interval, std::vector<std::string> checks) {
  SuiteConfig c;
  c.context = std::move(context);
  c.interval = std::move(interval);
  c.checks = std::move(checks);
  return c;
}

}  // namespace

TEST_CASE("verify examples") {
  SuiteConfig two = config("fincat", "two", {});
  two.defaults_when_empty = true;
  const auto r = cli::run_suite(two);
  CHECK(r.status == Status::Pass);
  CHECK(cli::exit_code(r.status) == cli::kPass);
  CHECK(r.report["verdict"] == "pass");
  CHECK(r.report["config"]["checks"].size() == 5);

  SuiteConfig chain = config("chaincat", "I", {"representable"});
  const auto f = cli::run_suite(chain);
  CHECK(f.status == Status::Fail);
  CHECK(cli::exit_code(f.status) == cli::kFail);
  const auto& items = f.report["results"][0]["checks"];
  bool witnessed = false;
  for (const auto& it : items)
    if (it["status"] == "fail" && it.contains("witness")) witnessed = it["witness"].contains("square_1");
  CHECK(witnessed);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(cli::run_suite(config("fincat", "two", {})), ConfigError);
  CHECK_THROWS_AS(cli::run_suite(config("fincat", "two", {"nope"})), ConfigError);
  CHECK_THROWS_AS(cli::run_suite(config("other", "two", {"cocategory"})), ConfigError);
  CHECK_THROWS_AS(cli::run_suite(config("chaincat", "I", {"cocycle"})), ConfigError);
  CHECK_THROWS_AS(cli::run_suite(config("fincat", "pentagon", {"cocategory"})), ConfigError);
  SuiteConfig zero = config("fincat", "two", {"cocategory"});
  zero.cap = 0;
  CHECK_THROWS_AS(cli::run_suite(zero), ConfigError);
  CHECK(cli::exit_code(Status::Inconclusive) == cli::kInconclusive);
}

TEST_CASE("a tiny cap is inconclusive, never pass") {
  SuiteConfig c = config("fincat", "two", {"invertibility"});
  c.cap = 2;
  CHECK(cli::run_suite(c).status == Status::Inconclusive);
}

TEST_CASE("chaincat JSON input reports parse positions") {
  const SuiteConfig c = config("chaincat", "", {"cocategory"});
  try {
    cli::run_suite(c, std::string("{\n  \"C1\": [1,\n"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("scenarios") {
  CHECK(cli::scenario_names().size() == 10);
  CHECK_THROWS_AS(cli::reproduce("no-such-scenario"), UnknownScenario);

  const auto a = cli::reproduce("chain-counterexample");
  const auto b = cli::reproduce("chain-counterexample");
  CHECK(a.status == Status::Pass);
  CHECK(cli::render_payload(a) == cli::render_payload(b));
  const auto& facts = a.report["facts"];
  CHECK(facts["boundaries_equal"] == true);
  CHECK(facts["degree_2_differs"] == true);
  CHECK(facts["d1_d2_zero"] == true);

  const auto j = cli::reproduce("free-J-from-two");
  CHECK(j.report["facts"]["objects"] == 2);
  CHECK(j.report["facts"]["morphisms"] == 4);

  const auto ladder = cli::reproduce("invertibility-ladder").report["facts"];
  for (const auto& [k, val] : ladder["two"].items()) CHECK(val == false);
  for (const auto& [k, val] : ladder["iso"].items()) CHECK(val == true);
}
