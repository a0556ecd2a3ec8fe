#ifndef CYCSORT_COSETS_HPP
#define CYCSORT_COSETS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cycsort/permutation.hpp"
#include "cycsort/rational.hpp"

namespace cycsort {

/// Canonical representative of a rotation class (left coset of the full
/// rotation subgroup): the unique rotation of the word with leading value 1.
class CosetRep {
 public:
  /// Requires word(1) == 1; use canonicalize() for arbitrary words.
  explicit CosetRep(Permutation p);

  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend bool operator<(const CosetRep& a, const CosetRep& b) {
    return a.perm_ < b.perm_;
  }

 private:
  Permutation perm_;
};

/// Dense rank of a coset, in [0, (n-1)!). The identity coset is rank 0.
struct CosetIndex {
  std::uint64_t value = 0;
  friend constexpr bool operator==(const CosetIndex&, const CosetIndex&) = default;
  friend constexpr bool operator<(const CosetIndex& a, const CosetIndex& b) {
    return a.value < b.value;
  }
};

/// An n-cycle written as a clockwise label sequence (a1,...,an), defined up
/// to cyclic rotation of the labels. Equality is rotation-insensitive.
class Cycle {
 public:
  explicit Cycle(std::vector<int> labels);

  int size() const noexcept { return labels_.size() > 0 ? static_cast<int>(labels_.size()) : 0; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// The one-line word [a1,...,an] associated with this cycle.
  Permutation to_word() const { return Permutation(labels_); }
  static Cycle from_word(const Permutation& p) { return Cycle(p.word()); }

  friend bool operator==(const Cycle& a, const Cycle& b);

 private:
  std::vector<int> labels_;
};

/// "(a1,a2,...,an)" with comma-separated labels (digits may be run together
/// for n <= 9, mirroring word serialization).
std::string to_string(const Cycle& c);
Cycle parse_cycle(std::string_view text);

/// Rotation placing value 1 first.
CosetRep canonicalize(const Permutation& p);

/// Lehmer-code rank of the suffix (letters 2..n) of the canonical word.
CosetIndex rank(const CosetRep& r);
CosetRep unrank(CosetIndex index, int n);

/// Minimum of inv over all n rotations of the word, computed from one inv
/// evaluation plus n-1 incremental rotation deltas.
std::int64_t minv(const Permutation& p);
/// Smallest rotation shift attaining minv(p).
int minv_argmin(const Permutation& p);

/// True iff every length-k prefix of the word sums to at most k(n+1)/2.
/// Characterizes the words whose inv is minimal in their rotation class.
bool is_heavy_tailed(const Permutation& p);

/// Graph distance between two n-cycles: the minimum of inv over the n
/// elements w1 * c^j * w2^{-1} of the corresponding double coset.
std::int64_t distance(const Cycle& g1, const Cycle& g2);

struct DistanceWitness {
  std::int64_t distance = 0;
  std::vector<int> shifts;  // all rotation shifts attaining the minimum
  Permutation witness;      // the minimizer for the smallest shift
};
DistanceWitness distance_witness(const Cycle& g1, const Cycle& g2);

/// Exact mean of inv over the rotation class: (cwinv(p) + C(n+1,3)) / n.
Rational coset_mean_inv(const Permutation& p);

/// Some tau = p1 * c^j * p2^{-1} whose first k entries sum to at most
/// k(n+1)/2; the smallest such shift j is used. Always exists.
Permutation prefix_sum_witness(const Permutation& p1, const Permutation& p2, int k);

/// C(n-k,2) - k + sum of the first k entries of t; dominates inv(t).
std::int64_t prefix_inv_bound(const Permutation& t, int k);

}  // namespace cycsort

#endif
