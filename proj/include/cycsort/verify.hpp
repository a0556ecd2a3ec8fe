#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Property suites backing the `verify` CLI command. Each suite checks one
// statistic identity or search cross-check against an independent oracle,
// exhaustively at small n and on seeded random samples above that.

namespace cycsort {

struct SuiteFailure {
  std::string input;   // reproducing input, e.g. "n=5 p=3,1,4,5,2"
  std::string detail;  // observed vs expected
};

struct SuiteResult {
  std::string name;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<SuiteFailure> failures;  // first few only, see kMaxRecorded
  double seconds = 0.0;

  static constexpr std::size_t kMaxRecorded = 10;
  bool passed() const { return failure_count == 0; }
};

struct SuiteOptions {
  int n_min = 0;             // 0 picks the suite default
  int n_max = 0;             // 0 picks the suite default
  std::uint64_t seed = 0;    // documented default seed
  std::uint64_t cases = 0;   // random cases per n; 0 picks the suite default
  int workers = 1;
};

// Names accepted by run_suite, in documentation order.
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace cycsort
