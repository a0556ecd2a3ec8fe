#include "cycsort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cycsort/combinatorics.hpp"
#include "cycsort/cosets.hpp"
#include "cycsort/extremal.hpp"
#include "cycsort/permutation.hpp"
#include "cycsort/rational.hpp"
#include "cycsort/schreier.hpp"

namespace cycsort {

namespace {

constexpr int kExhaustiveCap = 8;

// Quadratic pair-sum oracles, deliberately independent of the library's
// O(n log n) implementations.
std::int64_t oracle_inv(const Permutation& p) {
  const int n = p.size();
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++c;
  return c;
}

std::int64_t oracle_winv(const Permutation& p) {
  const int n = p.size();
  std::int64_t s = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) s += p(i) - p(j);
  return s;
}

std::int64_t oracle_minv(const Permutation& p) {
  std::int64_t best = -1;
  for (int j = 0; j < p.size(); ++j) {
    const std::int64_t v = oracle_inv(rotate(p, j));
    if (best < 0 || v < best) best = v;
  }
  return best;
}

Permutation random_permutation(int n, std::mt19937_64& eng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(eng() % static_cast<std::uint64_t>(i + 1));
    std::swap(w[static_cast<std::size_t>(i)], w[j]);
  }
  return Permutation(std::move(w));
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

struct Runner {
  SuiteResult& r;
  std::mt19937_64 eng;
  std::uint64_t random_cases;

  void fail(std::string input, std::string detail) {
    if (r.failures.size() < SuiteResult::kMaxRecorded)
      r.failures.push_back({std::move(input), std::move(detail)});
    ++r.failure_count;
  }

  // Exhaustive below kExhaustiveCap, seeded random samples above.
  template <class Fn>
  void per_permutation(int n, Fn&& fn) {
    if (n <= kExhaustiveCap) {
      for_each_permutation(n, [&](const Permutation& p) {
        ++r.cases;
        fn(p);
      });
    } else {
      for (std::uint64_t c = 0; c < random_cases; ++c) {
        ++r.cases;
        fn(random_permutation(n, eng));
      }
    }
  }
};

std::string tag(int n, const Permutation& p) {
  return "n=" + std::to_string(n) + " p=" + to_string(p);
}

void suite_winv_identity(Runner& run, int n) {
  run.per_permutation(n, [&](const Permutation& p) {
    const std::int64_t got = winv(p);
    const std::int64_t want = oracle_winv(p);
    if (got != want)
      run.fail(tag(n, p), "winv=" + std::to_string(got) + " pair-sum oracle=" +
                              std::to_string(want));
  });
}

void suite_cwinv_invariance(Runner& run, int n) {
  const std::int64_t cap = binom(n, 3);
  run.per_permutation(n, [&](const Permutation& p) {
    const std::int64_t base = cwinv(p);
    if (base < 0 || base > cap)
      run.fail(tag(n, p), "cwinv=" + std::to_string(base) + " outside [0, " +
                              std::to_string(cap) + "]");
    for (int j = 1; j < n; ++j) {
      const std::int64_t rot = cwinv(rotate(p, j));
      if (rot != base) {
        run.fail(tag(n, p) + " j=" + std::to_string(j),
                 "cwinv(rotate)=" + std::to_string(rot) + " expected " +
                     std::to_string(base));
        break;
      }
    }
  });
  ++run.r.cases;
  if (cwinv(Permutation::identity(n)) != 0)
    run.fail("n=" + std::to_string(n) + " p=id", "cwinv(id) != 0");
  ++run.r.cases;
  if (cwinv(Permutation::reversal(n)) != cap)
    run.fail("n=" + std::to_string(n) + " p=w0",
             "cwinv(w0) != " + std::to_string(cap));
}

void suite_complements(Runner& run, int n) {
  const Permutation w0 = Permutation::reversal(n);
  const std::int64_t winv_total = binom(n + 1, 3);
  const std::int64_t cwinv_total = binom(n, 3);
  run.per_permutation(n, [&](const Permutation& p) {
    const Permutation q = compose(p, w0);
    if (winv(p) + winv(q) != winv_total)
      run.fail(tag(n, p), "winv(p)+winv(p*w0)=" +
                              std::to_string(winv(p) + winv(q)) + " expected " +
                              std::to_string(winv_total));
    if (cwinv(p) + cwinv(q) != cwinv_total)
      run.fail(tag(n, p), "cwinv(p)+cwinv(p*w0)=" +
                              std::to_string(cwinv(p) + cwinv(q)) +
                              " expected " + std::to_string(cwinv_total));
  });
}

void suite_mean_inv(Runner& run, int n) {
  Rational max_seen(0);
  run.per_permutation(n, [&](const Permutation& p) {
    std::int64_t total = 0;
    for (int j = 0; j < n; ++j) total += oracle_inv(rotate(p, j));
    const Rational want(total, n);
    const Rational got = coset_mean_inv(p);
    if (!(got == want))
      run.fail(tag(n, p), "coset_mean_inv=" + got.to_string() +
                              " rotation-mean oracle=" + want.to_string());
    if (max_seen < got) max_seen = got;
  });
  ++run.r.cases;
  const Rational want_max(static_cast<std::int64_t>(2 * n - 1) * (n - 1), 6);
  if (!(max_seen == want_max))
    run.fail("n=" + std::to_string(n),
             "max coset_mean_inv=" + max_seen.to_string() + " expected " +
                 want_max.to_string());
}

void suite_heavy_tailed(Runner& run, int n) {
  run.per_permutation(n, [&](const Permutation& p) {
    const std::int64_t m = minv(p);
    if (m != oracle_minv(p))
      run.fail(tag(n, p), "incremental minv=" + std::to_string(m) +
                              " naive oracle=" + std::to_string(oracle_minv(p)));
    const bool tailed = is_heavy_tailed(p);
    if (tailed != (inv(p) == m))
      run.fail(tag(n, p), std::string("is_heavy_tailed=") +
                              (tailed ? "true" : "false") + " but inv=" +
                              std::to_string(inv(p)) + " minv=" +
                              std::to_string(m));
  });
}

void suite_prefix_bound(Runner& run, int n) {
  run.per_permutation(n, [&](const Permutation& t) {
    const std::int64_t it = inv(t);
    for (int k = 0; k <= n; ++k) {
      const std::int64_t bound = prefix_inv_bound(t, k);
      if (it > bound) {
        run.fail(tag(n, t) + " k=" + std::to_string(k),
                 "inv=" + std::to_string(it) + " exceeds bound " +
                     std::to_string(bound));
        break;
      }
    }
  });
}

void suite_witness(Runner& run, int n) {
  for (std::uint64_t c = 0; c < run.random_cases; ++c) {
    ++run.r.cases;
    const Permutation p1 = random_permutation(n, run.eng);
    const Permutation p2 = random_permutation(n, run.eng);
    const int k = static_cast<int>(run.eng() % static_cast<std::uint64_t>(n + 1));
    const Permutation t = prefix_sum_witness(p1, p2, k);
    const std::string where =
        "n=" + std::to_string(n) + " p1=" + to_string(p1) + " p2=" +
        to_string(p2) + " k=" + std::to_string(k);
    std::int64_t prefix = 0;
    for (int i = 1; i <= k; ++i) prefix += t(i);
    if (2 * prefix > static_cast<std::int64_t>(k) * (n + 1))
      run.fail(where, "witness " + to_string(t) + " violates the prefix bound");
    const Permutation q2 = inverse(p2);
    bool member = false;
    for (int j = 0; j < n && !member; ++j)
      member = (compose(rotate(p1, j), q2) == t);
    if (!member)
      run.fail(where, "witness " + to_string(t) + " not in the double coset");
  }
}

void suite_distance_oracle(Runner& run, int n) {
  const GeneratorSet gens{GeneratorKind::adjacent, n};
  const Cycle canonical = Cycle::from_word(Permutation::identity(n));
  for (std::uint64_t c = 0; c < run.random_cases; ++c) {
    ++run.r.cases;
    const Permutation a = random_permutation(n, run.eng);
    const Permutation b = random_permutation(n, run.eng);
    const Cycle g1 = Cycle::from_word(a);
    const Cycle g2 = Cycle::from_word(b);
    const std::string where =
        "n=" + std::to_string(n) + " g1=" + to_string(g1) + " g2=" + to_string(g2);
    const std::int64_t formula = distance(g1, g2);
    const DistanceField f = bfs(rank(canonicalize(a)), n, gens);
    const std::int64_t graph = f.dist[rank(canonicalize(b)).value];
    if (formula != graph)
      run.fail(where, "double-coset formula=" + std::to_string(formula) +
                          " BFS=" + std::to_string(graph));
    if (distance(canonical, g2) != minv(b))
      run.fail(where, "distance(c_n, g2)=" +
                          std::to_string(distance(canonical, g2)) +
                          " but minv=" + std::to_string(minv(b)));
  }
}

void suite_pi0_agreement(Runner& run, int n) {
  ++run.r.cases;
  const Permutation direct = build_pi0(n);
  const Permutation greedy = build_pi0_greedy(n);
  const std::string where = "n=" + std::to_string(n);
  if (!(direct == greedy))
    run.fail(where, "positional " + to_string(direct) + " vs greedy " +
                        to_string(greedy));
  if (inv(direct) != inv_pi0(n))
    run.fail(where, "inv(pi0)=" + std::to_string(inv(direct)) +
                        " closed form=" + std::to_string(inv_pi0(n)));
  if (!is_heavy_tailed(direct))
    run.fail(where, "pi0 " + to_string(direct) + " is not heavy tailed");
}

void suite_conjecture(Runner& run, int n, int workers) {
  ++run.r.cases;
  const ConjectureReport rep = verify_conjecture_sort_eq_pi0(n, workers);
  if (!rep.equal)
    run.fail("n=" + std::to_string(n),
             "sort_exact=" + std::to_string(rep.sort_exact) + " inv_pi0=" +
                 std::to_string(rep.inv_pi0));
}

struct SuiteDefaults {
  const char* name;
  int default_min;
  int default_max;
  std::uint64_t default_cases;
};

constexpr SuiteDefaults kSuites[] = {
    {"winv-identity", 1, 12, 10000},
    {"cwinv-invariance", 1, 12, 10000},
    {"complements", 1, 12, 10000},
    {"mean-inv", 1, 7, 10000},
    {"heavy-tailed", 1, 12, 10000},
    {"prefix-bound", 1, 7, 10000},
    {"witness", 2, 8, 10000},
    {"distance-oracle", 2, 7, 1000},
    {"pi0-agreement", 2, 64, 10000},
    {"conjecture-sort-pi0", 2, 11, 10000},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  const SuiteDefaults* defaults = nullptr;
  for (const auto& s : kSuites) {
    if (name == s.name) {
      defaults = &s;
      break;
    }
  }
  if (defaults == nullptr) {
    std::string msg = "unknown suite '" + name + "'; valid names:";
    for (const auto& s : kSuites) msg += std::string(" ") + s.name;
    throw std::invalid_argument(msg);
  }

  SuiteResult result;
  result.name = name;
  result.n_min = opts.n_min > 0 ? opts.n_min : defaults->default_min;
  result.n_max = opts.n_max > 0 ? opts.n_max : defaults->default_max;
  if (result.n_max < result.n_min)
    throw std::invalid_argument("empty n range for suite '" + name + "'");

  Runner run{result, std::mt19937_64(opts.seed),
             opts.cases > 0 ? opts.cases : defaults->default_cases};

  const auto start = std::chrono::steady_clock::now();
  for (int n = result.n_min; n <= result.n_max; ++n) {
    if (name == "winv-identity") suite_winv_identity(run, n);
    else if (name == "cwinv-invariance") suite_cwinv_invariance(run, n);
    else if (name == "complements") suite_complements(run, n);
    else if (name == "mean-inv") suite_mean_inv(run, n);
    else if (name == "heavy-tailed") suite_heavy_tailed(run, n);
    else if (name == "prefix-bound") suite_prefix_bound(run, n);
    else if (name == "witness") suite_witness(run, n);
    else if (name == "distance-oracle") suite_distance_oracle(run, n);
    else if (name == "pi0-agreement") suite_pi0_agreement(run, n);
    else suite_conjecture(run, n, opts.workers);
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace cycsort
