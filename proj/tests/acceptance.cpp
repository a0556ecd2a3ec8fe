// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Heavyweight searches are cached and reused across criteria.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cycsort/combinatorics.hpp"
#include "cycsort/cosets.hpp"
#include "cycsort/extremal.hpp"
#include "cycsort/permutation.hpp"
#include "cycsort/rational.hpp"
#include "cycsort/schreier.hpp"
#include "cycsort/verify.hpp"

using namespace cycsort;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << idx << ": " << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
  const GeneratorSet adj4{GeneratorKind::adjacent, 4};
  const GeneratorSet adj8{GeneratorKind::adjacent, 8};

  // criterion 1: exact small values by BFS, under a second
  {
    const auto start = std::chrono::steady_clock::now();
    const int sort5 = sort_exact(5);
    const int diam5 = diameter_exact(5, GeneratorSet{GeneratorKind::adjacent, 5});
    const double t = seconds_since(start);
    report(1, "sort(5)=4 and diameter(5)=5 by BFS in under 1s",
           sort5 == 4 && diam5 == 5 && t < 1.0,
           "sort=" + std::to_string(sort5) + " diam=" + std::to_string(diam5) +
               " time=" + std::to_string(t) + "s");
  }

  // criterion 2: the n=4 graph matches the 6-vertex/8-edge reference figure
  {
    const auto start = std::chrono::steady_clock::now();
    const auto edges = schreier_edges(4, adj4);
    // Reference picture: vertices A..F with edges D-B, B-A, A-C, C-D, D-F,
    // F-E, E-A, B-C; the explicit isomorphism onto our rank-indexed vertices
    // is A=(1234)=0, B=(1243)=1, C=(1342)=3, D=(1432)=5, E=(1324)=2,
    // F=(1423)=4.
    const std::map<char, std::uint64_t> iso{{'A', 0}, {'B', 1}, {'C', 3},
                                            {'D', 5}, {'E', 2}, {'F', 4}};
    const char* reference[] = {"DB", "BA", "AC", "CD", "DF", "FE", "EA", "BC"};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> mapped;
    for (const char* e : reference) {
      const std::uint64_t a = iso.at(e[0]);
      const std::uint64_t b = iso.at(e[1]);
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    const bool graph_ok = factorial(3) == 6 && edges.size() == 8 && edges == mapped;
    const int sort4 = sort_exact(4);
    const int diam4 = diameter_exact(4, adj4);
    const double t = seconds_since(start);
    report(2, "n=4 graph has 6 vertices, 8 edges matching the reference figure; "
              "sort(4)=diameter(4)=2",
           graph_ok && sort4 == 2 && diam4 == 2 && t < 1.0,
           "edges=" + std::to_string(edges.size()) + " sort=" +
               std::to_string(sort4) + " diam=" + std::to_string(diam4) +
               " time=" + std::to_string(t) + "s");
  }

  // criteria 3 and 4 share the exact sorting times
  std::map<int, int> sorts;
  for (int n = 2; n <= 11; ++n) sorts[n] = sort_exact(n);

  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 11; ++n) {
      const std::int64_t expected = inv_pi0(n);
      if (sorts[n] != expected) {
        ok = false;
        detail += " n=" + std::to_string(n) + ":" + std::to_string(sorts[n]) +
                  "!=" + std::to_string(expected);
      }
    }
    const char* large = std::getenv("CYCSORT_ACCEPT_LARGE");
    if (large != nullptr && std::string(large) == "1") {
      const int sort12 = sort_exact(12);
      if (sort12 != 33) {
        ok = false;
        detail += " n=12:" + std::to_string(sort12) + "!=33";
      } else {
        detail = "including n=12 (=33)";
      }
    } else if (ok) {
      detail = "n in [2,11]; set CYCSORT_ACCEPT_LARGE=1 for n=12";
    }
    report(3, "sorting time equals inv(pi0) for n in [2,11]", ok, detail);
  }

  // diameters for the sandwich and the determinism criterion
  std::map<int, int> diams;
  for (int n = 2; n <= 8; ++n)
    diams[n] = diameter_exact(n, GeneratorSet{GeneratorKind::adjacent, n});

  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 11; ++n) {
      const BoundsReport b = bounds(n);
      const Rational sort_rat(sorts[n]);
      if (!(b.lower <= static_cast<double>(sorts[n])) ||
          !(sort_rat <= b.sort_upper)) {
        ok = false;
        detail += " sort-bound-violation n=" + std::to_string(n);
      }
      if (n <= 8) {
        const Rational diam_rat(diams[n]);
        if (!(sorts[n] <= diams[n]) || !(diam_rat <= b.diam_upper)) {
          ok = false;
          detail += " diam-bound-violation n=" + std::to_string(n);
        }
      }
    }
    if (ok) detail = "sort bounds n in [2,11], diameter bounds n in [2,8]";
    report(4, "bound sandwich holds with exact comparisons", ok, detail);
  }

  // criterion 5: extremal word golden value
  {
    const std::string got = to_string(build_pi0(12));
    report(5, "pi0(12) equals the golden word byte-exactly",
           got == "6,5,4,3,12,2,11,1,10,9,8,7", got);
  }

  // criterion 6: reversal-class minv closed form
  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 64; ++n) {
      const std::int64_t expected = binom((n + 1) / 2, 2) + binom(n / 2, 2);
      const std::int64_t got = minv(Permutation::reversal(n));
      if (got != expected) {
        ok = false;
        detail += " n=" + std::to_string(n) + ":" + std::to_string(got) +
                  "!=" + std::to_string(expected);
      }
    }
    if (ok) detail = "n in [2,64]";
    report(6, "minv of the reversal class matches the split binomial formula", ok,
           detail);
  }

  // criterion 7: the eight identity/oracle property suites at their defaults
  {
    const char* suites[] = {"winv-identity", "cwinv-invariance", "complements",
                            "mean-inv",      "heavy-tailed",     "prefix-bound",
                            "witness",       "distance-oracle"};
    bool ok = true;
    std::string detail;
    for (const char* name : suites) {
      const SuiteResult r = run_suite(name, SuiteOptions{});
      if (!r.passed()) {
        ok = false;
        detail += std::string(" ") + name + ":" + std::to_string(r.failure_count) +
                  " failures";
      }
    }
    if (ok) detail = "8 suites, default ranges, seed 0";
    report(7, "property suites all green", ok, detail);
  }

  // criterion 8: unimodality survey; fails only on inconsistent totals
  {
    bool consistent = true;
    bool all_unimodal = true;
    std::string detail;
    for (int n = 2; n <= 11; ++n) {
      const MinvHistogram h = minv_distribution(n);
      std::uint64_t total = 0;
      for (std::uint64_t c : h.counts) total += c;
      if (total != factorial(n - 1)) {
        consistent = false;
        detail += " bad-total n=" + std::to_string(n);
      }
      if (!is_unimodal(h)) {
        all_unimodal = false;
        detail += " not-unimodal n=" + std::to_string(n);
      }
    }
    if (consistent && detail.empty())
      detail = std::string("unimodal for all n in [2,11]: ") +
               (all_unimodal ? "yes" : "no");
    report(8, "minv distribution totals consistent; unimodality verdict recorded",
           consistent, detail);
  }

  // criterion 9: worker count cannot change any result
  {
    const int diam_one = diams[8];
    const int diam_eight = diameter_exact(8, adj8, 8);
    const DistanceField field_one = bfs(CosetIndex{0}, 8, adj8, 1);
    const DistanceField field_eight = bfs(CosetIndex{0}, 8, adj8, 8);
    std::ostringstream dump_one, dump_eight;
    field_one.dump(dump_one);
    field_eight.dump(dump_eight);
    const bool ok = diam_one == diam_eight && dump_one.str() == dump_eight.str();
    report(9, "diameter(8) and the n=8 distance dump agree for 1 and 8 workers",
           ok,
           "diam_1=" + std::to_string(diam_one) + " diam_8=" +
               std::to_string(diam_eight) + " dumps " +
               (dump_one.str() == dump_eight.str() ? "identical" : "differ"));
  }

  if (failures == 0) {
    std::cout << "acceptance: all 9 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
