#include "cycsort/extremal.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "cycsort/combinatorics.hpp"
#include "cycsort/cosets.hpp"

namespace cycsort {

namespace {

// Least k with k*k >= x (x >= 0).
std::int64_t least_k_square(std::int64_t x) {
  std::int64_t k = isqrt(x);
  if (k * k < x) ++k;
  return k;
}

// Least k with k*k - k >= x.
std::int64_t least_k_square_minus(std::int64_t x) {
  std::int64_t k = isqrt(x);
  while (k * k - k < x) ++k;
  while (k > 0 && (k - 1) * (k - 1) - (k - 1) >= x) --k;
  return k;
}

}  // namespace

KtSequence kt_sequence(int n) {
  if (n < 2) throw std::domain_error("kt_sequence: requires n >= 2");
  KtSequence s;
  s.n = n;
  s.m = n / 2;
  const bool even = (n % 2 == 0);
  s.values.reserve(static_cast<std::size_t>(s.m));
  for (int t = 1; t <= s.m; ++t) {
    const std::int64_t x = static_cast<std::int64_t>(t) * (n - t);
    s.values.push_back(even ? least_k_square(x) : least_k_square_minus(x));
  }
  return s;
}

Permutation build_pi0(int n) {
  if (n < 2) throw std::domain_error("build_pi0: requires n >= 2");
  const KtSequence ks = kt_sequence(n);
  const int m = ks.m;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int t = 1; t <= m; ++t) {
    const auto pos = static_cast<std::size_t>(ks.values[static_cast<std::size_t>(t - 1)] + t);
    w[pos - 1] = n + 1 - t;
  }
  // Remaining slots take the small letters n-m, ..., 1 in descending order.
  int next = n - m;
  for (auto& slot : w) {
    if (slot == 0) slot = next--;
  }
  return Permutation(std::move(w));
}

Permutation build_pi0_greedy(int n) {
  if (n < 2) throw std::domain_error("build_pi0_greedy: requires n >= 2");
  const int m = n / 2;
  // Half rotation of the reversal word: [n-m, ..., 1, n, ..., n-m+1].
  std::vector<int> w = rotate(Permutation::reversal(n), m).word();
  for (int letter = n; letter > n - m; --letter) {
    auto pos = static_cast<std::size_t>(
        std::find(w.begin(), w.end(), letter) - w.begin());
    // A letter may pass the small letters only; the previously placed larger
    // letters keep their relative order.
    while (pos > 0 && w[pos - 1] < letter) {
      std::swap(w[pos - 1], w[pos]);
      if (!is_heavy_tailed(Permutation(w))) {
        std::swap(w[pos - 1], w[pos]);  // undo the violating swap
        break;
      }
      --pos;
    }
  }
  return Permutation(std::move(w));
}

std::int64_t inv_pi0(int n) {
  if (n < 2) throw std::domain_error("inv_pi0: requires n >= 2");
  const KtSequence ks = kt_sequence(n);
  std::int64_t sum = 0;
  for (std::int64_t k : ks.values) sum += k;
  return binom(n, 2) - sum;
}

BoundsReport bounds(int n) {
  if (n < 1) throw std::domain_error("bounds: requires n >= 1");
  BoundsReport r;
  r.n = n;
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  r.sort_upper = Rational(2 * nn - 3 * n + 1, 6);
  r.diam_upper = Rational(3 * nn - 4 * n + 1, 8);
  r.lower = (0.5 - std::numbers::pi / 16.0) * static_cast<double>(nn) -
            1.5 * static_cast<double>(n);
  r.inv_pi0 = (n >= 2) ? inv_pi0(n) : 0;
  r.minv_w0 = binom((n + 1) / 2, 2) + binom(n / 2, 2);
  return r;
}

nlohmann::json to_json(const BoundsReport& r) {
  auto rational_json = [](const Rational& q) {
    return nlohmann::json{{"num", q.num},
                          {"den", q.den},
                          {"floor", q.floor()},
                          {"decimal", q.to_double()}};
  };
  return nlohmann::json{{"n", r.n},
                        {"lower", r.lower},
                        {"inv_pi0", r.inv_pi0},
                        {"minv_w0", r.minv_w0},
                        {"sort_upper", rational_json(r.sort_upper)},
                        {"diam_upper", rational_json(r.diam_upper)}};
}

}  // namespace cycsort
