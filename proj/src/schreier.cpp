#include "cycsort/schreier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include "cycsort/combinatorics.hpp"
#include "cycsort/extremal.hpp"

namespace cycsort {

namespace {

constexpr int kBfsCap = 14;
constexpr int kDiameterCap = 10;
constexpr int kDistributionCap = 12;
constexpr int kExportCap = 7;

// Hot-path state machinery: vertices are Lehmer ranks of canonical packed
// words and are expanded on the fly, never materialized as a set.
struct Kernel {
  int n;
  std::array<std::uint64_t, 16> fact{};
  std::vector<std::pair<int, int>> gens;  // 0-based value pairs, a < b

  Kernel(int n_, const GeneratorSet& g) : n(n_) {
    fact[0] = 1;
    for (int i = 1; i < 16; ++i)
      fact[static_cast<std::size_t>(i)] =
          fact[static_cast<std::size_t>(i) - 1] * static_cast<std::uint64_t>(i);
    for (auto [a, b] : g.transpositions()) gens.emplace_back(a - 1, b - 1);
  }

  // Rank of a canonical packed word (nibble 0 holds value 0): Lehmer code of
  // the suffix, digits counted with a seen-mask instead of a quadratic scan.
  std::uint64_t rank(PackedWord w) const {
    std::uint64_t idx = 0;
    std::uint32_t seen = 0;
    for (int k = 1; k < n; ++k) {
      const int v = w.get(k);  // in 1..n-1
      const int smaller =
          (v - 1) - std::popcount(seen & ((1u << v) - 1));
      idx += static_cast<std::uint64_t>(smaller) *
             fact[static_cast<std::size_t>(n - 1 - k)];
      seen |= 1u << v;
    }
    return idx;
  }

  // Inverse of rank; also produces the position table pos (pos.get(v) = slot
  // of value v) consumed by the generator swaps.
  void unrank(std::uint64_t idx, PackedWord& w, PackedWord& pos) const {
    w = PackedWord(0, n);
    pos = PackedWord(0, n);
    std::uint32_t remaining = ((1u << n) - 1) & ~1u;
    for (int k = 1; k < n; ++k) {
      const std::uint64_t f = fact[static_cast<std::size_t>(n - 1 - k)];
      auto d = static_cast<int>(idx / f);
      idx %= f;
      std::uint32_t m = remaining;
      while (d-- > 0) m &= m - 1;
      const int v = std::countr_zero(m);
      remaining &= ~(1u << v);
      w.set(k, v);
      pos.set(v, k);
    }
  }

  // Calls fn(u) for the rank u of each neighbor of vertex v (self-loops and
  // duplicate generator images both reach fn; callers treat visits as
  // idempotent, so multiplicity is irrelevant).
  template <class Fn>
  void expand(std::uint64_t v, Fn&& fn) const {
    PackedWord w, pos;
    unrank(v, w, pos);
    for (auto [a, b] : gens) {
      const int pa = pos.get(a);
      const int pb = pos.get(b);
      PackedWord t = w;
      t.set(pa, b);
      t.set(pb, a);
      // Swapping value 0 away from slot 0 breaks canonical form; rotate the
      // word so value 0 leads again.
      if (a == 0) t = t.rotated(pb);
      const std::uint64_t u = rank(t);
      if (u != v) fn(u);
    }
  }
};

std::uint64_t field_bytes(int n) { return 16 + factorial(n - 1); }

void check_bfs_cap(int n) {
  if (n < 1) throw std::domain_error("bfs: n must be >= 1");
  if (n > kBfsCap)
    throw resource_error(
        "bfs: n=" + std::to_string(n) + " exceeds the cap of " +
        std::to_string(kBfsCap) + "; the distance array alone would need " +
        std::to_string(factorial(std::min(n - 1, 20))) + " bytes");
}

int clamp_workers(int workers) { return workers < 1 ? 1 : workers; }

// One frontier pass of the level-synchronous search over [begin, end):
// expand every vertex at `level` and claim unvisited neighbors as level+1.
// Claims go through compare-and-swap, so each cell is counted exactly once
// and the final field does not depend on thread scheduling.
std::uint64_t expand_range(const Kernel& kern, std::uint8_t* dist,
                           std::uint64_t begin, std::uint64_t end, int level) {
  std::uint64_t claimed = 0;
  const auto next = static_cast<std::uint8_t>(level + 1);
  for (std::uint64_t v = begin; v < end; ++v) {
    if (std::atomic_ref<std::uint8_t>(dist[v]).load(std::memory_order_relaxed) !=
        static_cast<std::uint8_t>(level))
      continue;
    kern.expand(v, [&](std::uint64_t u) {
      std::atomic_ref<std::uint8_t> cell(dist[u]);
      if (cell.load(std::memory_order_relaxed) != DistanceField::unvisited) return;
      std::uint8_t expected = DistanceField::unvisited;
      if (cell.compare_exchange_strong(expected, next, std::memory_order_relaxed))
        ++claimed;
    });
  }
  return claimed;
}

// Serial queue BFS returning only the eccentricity; used per source by the
// diameter sweep, where fields are scratch buffers reused across sources.
int eccentricity_from(const Kernel& kern, std::uint64_t source,
                      std::vector<std::uint8_t>& dist,
                      std::vector<std::uint32_t>& cur,
                      std::vector<std::uint32_t>& nxt) {
  std::fill(dist.begin(), dist.end(), DistanceField::unvisited);
  dist[source] = 0;
  cur.assign(1, static_cast<std::uint32_t>(source));
  int level = 0;
  while (true) {
    nxt.clear();
    for (std::uint32_t v : cur) {
      kern.expand(v, [&](std::uint64_t u) {
        if (dist[u] == DistanceField::unvisited) {
          dist[u] = static_cast<std::uint8_t>(level + 1);
          nxt.push_back(static_cast<std::uint32_t>(u));
        }
      });
    }
    if (nxt.empty()) return level;
    ++level;
    cur.swap(nxt);
  }
}

void write_u64_le(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 8);
}

std::uint64_t read_u64_le(std::istream& is) {
  char b[8];
  is.read(b, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::pair<int, int>> GeneratorSet::transpositions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1);
  if (kind == GeneratorKind::cyclic && n >= 3) out.emplace_back(1, n);
  return out;
}

std::vector<CosetRep> neighbors(const CosetRep& r, const GeneratorSet& g) {
  if (g.n != r.size())
    throw std::domain_error("neighbors: generator set size mismatch");
  std::vector<CosetRep> out;
  for (auto [a, b] : g.transpositions()) {
    std::vector<int> w = r.perm().word();
    for (auto& v : w) {
      if (v == a) v = b;
      else if (v == b) v = a;
    }
    CosetRep image = canonicalize(Permutation(std::move(w)));
    if (!(image == r)) out.push_back(std::move(image));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int DistanceField::eccentricity() const {
  int ecc = 0;
  for (std::uint8_t d : dist) {
    if (d != unvisited && d > ecc) ecc = d;
  }
  return ecc;
}

void DistanceField::dump(std::ostream& os) const {
  const char header[8] = {'C', 'S', 'L', 'D', 1, static_cast<char>(n), 0, 0};
  os.write(header, 8);
  write_u64_le(os, source);
  os.write(reinterpret_cast<const char*>(dist.data()),
           static_cast<std::streamsize>(dist.size()));
}

DistanceField DistanceField::load(std::istream& is) {
  char header[8];
  is.read(header, 8);
  if (!is || header[0] != 'C' || header[1] != 'S' || header[2] != 'L' ||
      header[3] != 'D')
    throw std::invalid_argument("DistanceField::load: bad magic");
  if (header[4] != 1)
    throw std::invalid_argument("DistanceField::load: unsupported version");
  DistanceField f;
  f.n = static_cast<unsigned char>(header[5]);
  if (f.n < 1 || f.n > kBfsCap)
    throw std::invalid_argument("DistanceField::load: bad n");
  f.source = read_u64_le(is);
  f.dist.resize(factorial(f.n - 1));
  is.read(reinterpret_cast<char*>(f.dist.data()),
          static_cast<std::streamsize>(f.dist.size()));
  if (!is) throw std::invalid_argument("DistanceField::load: truncated file");
  return f;
}

DistanceField bfs(CosetIndex source, int n, const GeneratorSet& g, int workers) {
  check_bfs_cap(n);
  if (g.n != n) throw std::domain_error("bfs: generator set size mismatch");
  const std::uint64_t nv = factorial(n - 1);
  if (source.value >= nv)
    throw std::domain_error("bfs: source index out of range");
  workers = clamp_workers(workers);

  DistanceField field;
  field.n = n;
  field.source = source.value;
  field.dist.assign(nv, DistanceField::unvisited);
  field.dist[source.value] = 0;

  const Kernel kern(n, g);
  std::uint8_t* dist = field.dist.data();
  std::uint64_t visited = 1;

  for (int level = 0;; ++level) {
    if (level + 1 >= DistanceField::unvisited)
      throw std::logic_error("bfs: distance exceeds cell width");
    std::uint64_t claimed = 0;
    if (workers == 1 || nv < 1024) {
      claimed = expand_range(kern, dist, 0, nv, level);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
      const std::uint64_t chunk = (nv + static_cast<std::uint64_t>(workers) - 1) /
                                  static_cast<std::uint64_t>(workers);
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t b = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t e = std::min(nv, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, w, b, e] {
          counts[static_cast<std::size_t>(w)] = expand_range(kern, dist, b, e, level);
        });
      }
      for (auto& t : pool) t.join();
      for (std::uint64_t c : counts) claimed += c;
    }
    if (claimed == 0) break;
    visited += claimed;
  }

  if (visited != nv)
    throw std::logic_error("bfs: graph not connected, visited " +
                           std::to_string(visited) + " of " + std::to_string(nv));
  return field;
}

int sort_exact(int n, int workers) {
  if (n == 1) return 0;
  return bfs(CosetIndex{0}, n, GeneratorSet{GeneratorKind::adjacent, n}, workers)
      .eccentricity();
}

int diameter_exact(int n, const GeneratorSet& g, int workers) {
  if (n < 1) throw std::domain_error("diameter_exact: n must be >= 1");
  if (n > kDiameterCap)
    throw resource_error(
        "diameter_exact: n=" + std::to_string(n) + " exceeds the cap of " +
        std::to_string(kDiameterCap) + "; this would take " +
        std::to_string(factorial(n - 1)) + " BFS sweeps over " +
        std::to_string(factorial(n - 1)) + " vertices each");
  if (g.n != n) throw std::domain_error("diameter_exact: generator set size mismatch");
  if (n == 1) return 0;

  const std::uint64_t nv = factorial(n - 1);
  const Kernel kern(n, g);
  std::atomic<std::uint64_t> next_source{0};
  std::mutex merge_mutex;
  int diameter = 0;
  workers = clamp_workers(workers);

  auto sweep = [&] {
    std::vector<std::uint8_t> dist(nv);
    std::vector<std::uint32_t> cur, nxt;
    int local = 0;
    while (true) {
      const std::uint64_t s = next_source.fetch_add(1, std::memory_order_relaxed);
      if (s >= nv) break;
      local = std::max(local, eccentricity_from(kern, s, dist, cur, nxt));
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    diameter = std::max(diameter, local);
  };

  if (workers == 1) {
    sweep();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(sweep);
    for (auto& t : pool) t.join();
  }
  return diameter;
}

MinvHistogram minv_distribution(int n, int workers) {
  if (n > kDistributionCap)
    throw resource_error("minv_distribution: n=" + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(kDistributionCap) +
                         "; the distance field would need " +
                         std::to_string(field_bytes(n)) + " bytes");
  MinvHistogram h;
  h.n = n;
  if (n == 1) {
    h.counts = {1};
    return h;
  }
  const DistanceField f =
      bfs(CosetIndex{0}, n, GeneratorSet{GeneratorKind::adjacent, n}, workers);
  h.counts.assign(static_cast<std::size_t>(f.eccentricity()) + 1, 0);
  for (std::uint8_t d : f.dist) ++h.counts[d];
  return h;
}

bool is_unimodal(const MinvHistogram& h) {
  const auto& c = h.counts;
  if (c.empty()) throw std::domain_error("is_unimodal: empty histogram");
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 == c.size();
}

ConjectureReport verify_conjecture_sort_eq_pi0(int n, int workers) {
  ConjectureReport r;
  r.n = n;
  r.sort_exact = sort_exact(n, workers);
  r.inv_pi0 = inv_pi0(n);
  r.equal = (r.sort_exact == r.inv_pi0);
  return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> schreier_edges(
    int n, const GeneratorSet& g) {
  if (n < 1) throw std::domain_error("schreier_edges: n must be >= 1");
  if (n > kExportCap)
    throw resource_error("schreier_edges: explicit export capped at n <= " +
                         std::to_string(kExportCap) + " (" +
                         std::to_string(factorial(n - 1)) + " vertices requested)");
  if (g.n != n) throw std::domain_error("schreier_edges: generator set size mismatch");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  if (n == 1) return edges;
  const Kernel kern(n, g);
  const std::uint64_t nv = factorial(n - 1);
  for (std::uint64_t v = 0; v < nv; ++v) {
    kern.expand(v, [&](std::uint64_t u) {
      edges.emplace_back(std::min(v, u), std::max(v, u));
    });
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace cycsort
