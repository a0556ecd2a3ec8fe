#ifndef CYCSORT_PERMUTATION_HPP
#define CYCSORT_PERMUTATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycsort {

/// A permutation of [n] = {1..n} in one-line notation. Values are 1-based.
/// Immutable after construction; the constructor validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// [n, n-1, ..., 1], the maximal-inversion word.
  static Permutation reversal(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  /// Value at 1-based position i.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& word() const noexcept { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  std::vector<int> word_;
};

struct StatTriple {
  std::int64_t inv = 0;
  std::int64_t winv = 0;
  std::int64_t cwinv = 0;
  friend bool operator==(const StatTriple&, const StatTriple&) = default;
};

/// Number of inversions, counted by divide-and-conquer merging in O(n log n).
std::int64_t inv(const Permutation& p);

/// Weighted inversion number: sum of p(i) - p(j) over inversion pairs i < j.
/// Evaluated through the equivalent closed form sum(i^2) - sum(i * p(i)).
std::int64_t winv(const Permutation& p);

/// Cyclic weighted inversion number n*inv - 2*winv. Invariant under rotation
/// of the one-line word; ranges over [0, C(n,3)].
std::int64_t cwinv(const Permutation& p);

StatTriple stat_triple(const Permutation& p);

/// Left cyclic shift of the word by j positions, 0 <= j < n. This is the
/// one-line word of p composed with the j-th power of the full rotation.
Permutation rotate(const Permutation& p, int j);

/// inv(rotate(p,1)) - inv(p) computed without touching inv: n + 1 - 2*p(1).
std::int64_t inv_rotation_delta(const Permutation& p);

/// Left multiplication by the adjacent transposition of values i, i+1:
/// the letters i and i+1 exchange places in the word. Requires 1 <= i < n.
Permutation left_multiply_adjacent(const Permutation& p, int i);

/// (p o q)(i) = p(q(i)). Sizes must match.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// Cosine of the angle between the vectors (p(1),...,p(n)) and (1,...,n).
/// Equals 1 - winv(p)/sum(i^2) exactly; requires n >= 2.
double cos_angle(const Permutation& p);

/// Word serialization: concatenated digits for n <= 9 ("3142"), otherwise
/// comma-separated integers ("6,5,4,3,12,...").
std::string to_string(const Permutation& p);

/// Accepts both serialized forms above. Throws std::invalid_argument naming
/// the offending token on malformed input.
Permutation parse_permutation(std::string_view text);

/// One-line word packed 4 bits per letter into a single 64-bit value, the
/// state representation used by hot search loops. Letters are stored 0-based
/// (nibble value p(i)-1), so sizes up to 16 fit. Constructing from a larger
/// permutation is a domain error.
class PackedWord {
 public:
  static constexpr int max_size = 16;

  PackedWord() = default;
  constexpr PackedWord(std::uint64_t bits, int n) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {}

  static PackedWord pack(const Permutation& p);
  Permutation unpack() const;

  constexpr int size() const { return n_; }
  constexpr std::uint64_t bits() const { return bits_; }

  /// 0-based value at 0-based position.
  constexpr int get(int pos) const {
    return static_cast<int>((bits_ >> (4 * pos)) & 0xF);
  }
  constexpr void set(int pos, int value) {
    bits_ = (bits_ & ~(0xFULL << (4 * pos))) |
            (static_cast<std::uint64_t>(value) << (4 * pos));
  }

  /// Left cyclic shift by r nibbles (the packed analogue of rotate()).
  constexpr PackedWord rotated(int r) const {
    if (r == 0) return *this;
    const std::uint64_t mask =
        n_ == 16 ? ~0ULL : ((1ULL << (4 * n_)) - 1);
    const std::uint64_t lo = bits_ >> (4 * r);
    const std::uint64_t hi = bits_ << (4 * (n_ - r));
    return PackedWord((lo | hi) & mask, n_);
  }

  friend constexpr bool operator==(const PackedWord&, const PackedWord&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t n_ = 0;
};

}  // namespace cycsort

#endif
