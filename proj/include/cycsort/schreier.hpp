#ifndef CYCSORT_SCHREIER_HPP
#define CYCSORT_SCHREIER_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycsort/cosets.hpp"
#include "cycsort/permutation.hpp"

namespace cycsort {

/// Thrown when a search would exceed its documented size/memory cap. The
/// message states the estimated requirement.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorKind { adjacent, cyclic };

/// The conjugating transposition set: adjacent value switches s_1..s_{n-1},
/// optionally augmented with the wrap-around switch of values n and 1.
struct GeneratorSet {
  GeneratorKind kind = GeneratorKind::adjacent;
  int n = 0;

  /// Value pairs (a, b) swapped by each generator, duplicates removed
  /// (the wrap-around switch coincides with s_1 when n = 2).
  std::vector<std::pair<int, int>> transpositions() const;
};

/// Neighboring rotation classes of r: canonical forms of s*r over the
/// generator set, with r itself and duplicates dropped. Sorted by word.
std::vector<CosetRep> neighbors(const CosetRep& r, const GeneratorSet& g);

/// Single-source shortest-path distances over all (n-1)! rotation classes,
/// one byte per class, indexed by CosetIndex. 0xFF marks unvisited (never
/// present after a successful bfs; the graph is connected and bfs checks).
struct DistanceField {
  static constexpr std::uint8_t unvisited = 0xFF;

  int n = 0;
  std::uint64_t source = 0;
  std::vector<std::uint8_t> dist;

  int eccentricity() const;

  /// Byte-exact dump: 16-byte header ("CSLD", version byte 1, n byte,
  /// two zero bytes, source as little-endian uint64) followed by the raw
  /// distance bytes in CosetIndex order.
  void dump(std::ostream& os) const;
  static DistanceField load(std::istream& is);
};

/// Level-synchronous BFS over the implicit graph; vertices exist only as
/// ranks, expanded on the fly. Hard cap n <= 14 (the distance array alone
/// is (n-1)! bytes). Unvisited cells are claimed with compare-and-swap, so
/// the result is identical for any worker count.
DistanceField bfs(CosetIndex source, int n, const GeneratorSet& g, int workers = 1);

/// Eccentricity of the canonical (identity) class under adjacent switches:
/// the maximal number of switches needed to sort any rotation class.
int sort_exact(int n, int workers = 1);

/// Max eccentricity over all (n-1)! sources, each a full BFS; cap n <= 10.
int diameter_exact(int n, const GeneratorSet& g, int workers = 1);

/// counts[d] = number of rotation classes at distance d from the canonical
/// one; by the coset distance identity these are the classes with minv = d.
struct MinvHistogram {
  int n = 0;
  std::vector<std::uint64_t> counts;
};

MinvHistogram minv_distribution(int n, int workers = 1);

/// Weakly rising then weakly falling.
bool is_unimodal(const MinvHistogram& h);

struct ConjectureReport {
  int n = 0;
  std::int64_t sort_exact = 0;
  std::int64_t inv_pi0 = 0;
  bool equal = false;
};

/// Compares the BFS eccentricity against the closed-form inv of the
/// extremal word, the two sides computed independently.
ConjectureReport verify_conjecture_sort_eq_pi0(int n, int workers = 1);

/// Explicit edge list (index pairs a < b, sorted, deduplicated) for small n;
/// cap n <= 7 so the vertex set stays at most 720.
std::vector<std::pair<std::uint64_t, std::uint64_t>> schreier_edges(
    int n, const GeneratorSet& g);

}  // namespace cycsort

#endif
