#ifndef CYCSORT_EXTREMAL_HPP
#define CYCSORT_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cycsort/permutation.hpp"
#include "cycsort/rational.hpp"

namespace cycsort {

/// The offsets k_1 <= ... <= k_m (m = floor(n/2)) by which the large letters
/// n, n-1, ... are pushed left when building the extremal word: k_t is the
/// least integer with k^2 >= t(n-t) for even n, k^2 - k >= t(n-t) for odd n.
struct KtSequence {
  int n = 0;
  int m = 0;
  std::vector<std::int64_t> values;
};

/// Requires n >= 2. Exact integer search, no floating-point ceilings.
KtSequence kt_sequence(int n);

/// The extremal heavy-tailed permutation pi0: positionally, slot k_t + t
/// holds letter n+1-t and the remaining slots hold the small letters
/// n-m, ..., 1 in descending order. Requires n >= 2.
Permutation build_pi0(int n);

/// Independent construction: start from the half rotation of the reversal
/// word and push each large letter left one swap at a time while the word
/// stays heavy tailed. Agrees with build_pi0 for all supported n.
Permutation build_pi0_greedy(int n);

/// inv(pi0) = C(n,2) - sum of the k_t. Requires n >= 2.
std::int64_t inv_pi0(int n);

/// All closed-form bounds for one n, exact where the formulas are exact.
struct BoundsReport {
  int n = 0;
  Rational sort_upper;   // (2n^2 - 3n + 1) / 6
  Rational diam_upper;   // (3n^2 - 4n + 1) / 8
  double lower = 0.0;    // (1/2 - pi/16) n^2 - (3/2) n
  std::int64_t inv_pi0 = 0;
  std::int64_t minv_w0 = 0;  // C(ceil(n/2), 2) + C(floor(n/2), 2)
};

/// Requires n >= 1; inv_pi0 is taken as 0 for n = 1.
BoundsReport bounds(int n);

/// JSON with rationals rendered as {num, den, floor, decimal}.
nlohmann::json to_json(const BoundsReport& r);

}  // namespace cycsort

#endif
