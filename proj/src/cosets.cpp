#include "cycsort/cosets.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycsort/combinatorics.hpp"

namespace cycsort {

CosetRep::CosetRep(Permutation p) : perm_(std::move(p)) {
  if (perm_(1) != 1)
    throw std::invalid_argument("CosetRep: word must start with 1");
}

Cycle::Cycle(std::vector<int> labels) : labels_(std::move(labels)) {
  // Same validation as a word: distinct labels covering [n].
  Permutation check(labels_);
  (void)check;
}

bool operator==(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) return false;
  return canonicalize(a.to_word()) == canonicalize(b.to_word());
}

std::string to_string(const Cycle& c) {
  return "(" + to_string(c.to_word()) + ")";
}

Cycle parse_cycle(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("cycle must be parenthesized: '" + std::string(text) + "'");
  text.remove_prefix(1);
  text.remove_suffix(1);
  return Cycle(parse_permutation(text).word());
}

CosetRep canonicalize(const Permutation& p) {
  const int n = p.size();
  for (int j = 0; j < n; ++j) {
    if (p(j + 1) == 1) return CosetRep(rotate(p, j));
  }
  throw std::logic_error("canonicalize: value 1 not found");  // unreachable
}

CosetIndex rank(const CosetRep& r) {
  const int n = r.size();
  const auto& w = r.perm().word();
  std::uint64_t idx = 0;
  std::uint32_t seen = 0;
  for (int k = 1; k < n; ++k) {
    const int v = w[static_cast<std::size_t>(k)];  // in 2..n
    const int smaller =
        (v - 2) - __builtin_popcount(seen & ((1u << v) - 1));
    idx += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - k);
    seen |= 1u << v;
  }
  return CosetIndex{idx};
}

CosetRep unrank(CosetIndex index, int n) {
  if (n < 1) throw std::domain_error("unrank: n must be >= 1");
  std::uint64_t idx = index.value;
  if (idx >= factorial(n - 1))
    throw std::domain_error("unrank: index " + std::to_string(idx) +
                            " out of range for n=" + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  w[0] = 1;
  std::vector<int> remaining;
  remaining.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 2; v <= n; ++v) remaining.push_back(v);
  for (int k = 1; k < n; ++k) {
    const std::uint64_t f = factorial(n - 1 - k);
    const auto d = static_cast<std::size_t>(idx / f);
    idx %= f;
    w[static_cast<std::size_t>(k)] = remaining[d];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return CosetRep(Permutation(std::move(w)));
}

namespace {

// Shared scan for minv / argmin: inv of successive rotations differs by
// n + 1 - 2*p(j).
struct MinScan {
  std::int64_t best;
  int arg;
};

MinScan minv_scan(const Permutation& p) {
  const int n = p.size();
  std::int64_t cur = inv(p);
  MinScan s{cur, 0};
  for (int j = 1; j < n; ++j) {
    cur += static_cast<std::int64_t>(n) + 1 - 2 * p(j);
    if (cur < s.best) {
      s.best = cur;
      s.arg = j;
    }
  }
  return s;
}

}  // namespace

std::int64_t minv(const Permutation& p) { return minv_scan(p).best; }

int minv_argmin(const Permutation& p) { return minv_scan(p).arg; }

bool is_heavy_tailed(const Permutation& p) {
  const int n = p.size();
  std::int64_t prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += p(k);
    if (2 * prefix > static_cast<std::int64_t>(k) * (n + 1)) return false;
  }
  return true;
}

std::int64_t distance(const Cycle& g1, const Cycle& g2) {
  return distance_witness(g1, g2).distance;
}

DistanceWitness distance_witness(const Cycle& g1, const Cycle& g2) {
  if (g1.size() != g2.size())
    throw std::domain_error("distance: cycle size mismatch");
  const int n = g1.size();
  const Permutation w1 = g1.to_word();
  const Permutation w2_inv = inverse(g2.to_word());

  std::int64_t best = -1;
  std::vector<int> shifts;
  Permutation witness = w1;
  for (int j = 0; j < n; ++j) {
    // w1 * c^j has one-line word rotate(w1, j).
    Permutation tau = compose(rotate(w1, j), w2_inv);
    const std::int64_t d = inv(tau);
    if (best < 0 || d < best) {
      best = d;
      shifts.assign(1, j);
      witness = std::move(tau);
    } else if (d == best) {
      shifts.push_back(j);
    }
  }
  return DistanceWitness{best, std::move(shifts), std::move(witness)};
}

Rational coset_mean_inv(const Permutation& p) {
  const int n = p.size();
  return Rational(cwinv(p) + binom(n + 1, 3), n);
}

Permutation prefix_sum_witness(const Permutation& p1, const Permutation& p2, int k) {
  if (p1.size() != p2.size())
    throw std::domain_error("prefix_sum_witness: size mismatch");
  const int n = p1.size();
  if (k < 0 || k > n)
    throw std::domain_error("prefix_sum_witness: k out of [0," + std::to_string(n) + "]");
  const Permutation p2_inv = inverse(p2);
  for (int j = 0; j < n; ++j) {
    Permutation tau = compose(rotate(p1, j), p2_inv);
    std::int64_t prefix = 0;
    for (int i = 1; i <= k; ++i) prefix += tau(i);
    if (2 * prefix <= static_cast<std::int64_t>(k) * (n + 1)) return tau;
  }
  // Averaging over the n shifts guarantees one of them meets the bound.
  throw std::logic_error("prefix_sum_witness: no shift met the bound");
}

std::int64_t prefix_inv_bound(const Permutation& t, int k) {
  const int n = t.size();
  if (k < 0 || k > n)
    throw std::domain_error("prefix_inv_bound: k out of [0," + std::to_string(n) + "]");
  std::int64_t prefix = 0;
  for (int i = 1; i <= k; ++i) prefix += t(i);
  return binom(n - k, 2) - k + prefix;
}

}  // namespace cycsort
