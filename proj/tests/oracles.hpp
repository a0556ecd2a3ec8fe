#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cycsort/permutation.hpp"

// Brute-force reference implementations for the unit tests, written straight
// from the definitions and kept independent of the library code under test.

namespace oracles {

inline std::int64_t inv(const cycsort::Permutation& p) {
  const int n = p.size();
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++c;
  return c;
}

inline std::int64_t winv(const cycsort::Permutation& p) {
  const int n = p.size();
  std::int64_t s = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) s += p(i) - p(j);
  return s;
}

inline cycsort::Permutation rotate_once(const cycsort::Permutation& p) {
  std::vector<int> w = p.word();
  std::rotate(w.begin(), w.begin() + 1, w.end());
  return cycsort::Permutation(std::move(w));
}

inline std::int64_t minv(const cycsort::Permutation& p) {
  cycsort::Permutation q = p;
  std::int64_t best = oracles::inv(q);
  for (int j = 1; j < p.size(); ++j) {
    q = rotate_once(q);
    best = std::min(best, oracles::inv(q));
  }
  return best;
}

inline cycsort::Permutation random_permutation(int n, std::mt19937_64& eng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(eng() % static_cast<std::uint64_t>(i + 1));
    std::swap(w[static_cast<std::size_t>(i)], w[j]);
  }
  return cycsort::Permutation(std::move(w));
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(cycsort::Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace oracles
