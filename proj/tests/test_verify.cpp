#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycsort/verify.hpp"

using cycsort::SuiteOptions;
using cycsort::SuiteResult;

TEST_CASE("suite registry") {
  const auto& names = cycsort::suite_names();
  const std::vector<std::string> expected{
      "winv-identity", "cwinv-invariance", "complements",     "mean-inv",
      "heavy-tailed",  "prefix-bound",     "witness",         "distance-oracle",
      "pi0-agreement", "conjecture-sort-pi0"};
  CHECK(names == expected);
  CHECK_THROWS_AS(cycsort::run_suite("bogus"), std::invalid_argument);
  try {
    cycsort::run_suite("bogus");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("winv-identity") != std::string::npos);
  }
}

TEST_CASE("every suite passes on reduced ranges") {
  struct Reduced {
    const char* name;
    SuiteOptions opts;
  };
  const Reduced plans[] = {
      {"winv-identity", {.n_max = 9, .cases = 200}},
      {"cwinv-invariance", {.n_max = 7, .cases = 200}},
      {"complements", {.n_max = 8, .cases = 200}},
      {"mean-inv", {.n_max = 6}},
      {"heavy-tailed", {.n_max = 8, .cases = 200}},
      {"prefix-bound", {.n_max = 6}},
      {"witness", {.n_max = 7, .cases = 300}},
      {"distance-oracle", {.n_max = 6, .cases = 100}},
      {"pi0-agreement", {.n_max = 32}},
      {"conjecture-sort-pi0", {.n_max = 8}},
  };
  for (const auto& plan : plans) {
    INFO("suite: ", plan.name);
    const SuiteResult r = cycsort::run_suite(plan.name, plan.opts);
    CHECK(r.name == plan.name);
    CHECK(r.failure_count == 0);
    CHECK(r.failures.empty());
    CHECK(r.cases > 0);
    CHECK(r.n_min >= 1);
    CHECK(r.n_max >= r.n_min);
    CHECK(r.seconds >= 0.0);
  }
}

TEST_CASE("case counts are reproducible for a fixed seed") {
  SuiteOptions opts;
  opts.n_min = 9;
  opts.n_max = 10;
  opts.cases = 150;
  opts.seed = 42;
  const SuiteResult a = cycsort::run_suite("winv-identity", opts);
  const SuiteResult b = cycsort::run_suite("winv-identity", opts);
  CHECK(a.cases == b.cases);
  CHECK(a.cases == 300);
  CHECK(a.failure_count == b.failure_count);
  opts.seed = 7;
  CHECK(cycsort::run_suite("winv-identity", opts).passed());
}

TEST_CASE("empty range is rejected") {
  SuiteOptions opts;
  opts.n_min = 5;
  opts.n_max = 3;
  CHECK_THROWS_AS(cycsort::run_suite("winv-identity", opts), std::invalid_argument);
}
