#include "cycsort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <utility>

namespace cycsort {

namespace {

void validate_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("permutation word must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Merge step of the inversion count; counts pairs crossing the midpoint.
std::int64_t merge_count(std::vector<int>& a, std::vector<int>& tmp,
                         std::size_t lo, std::size_t mid, std::size_t hi) {
  std::int64_t crossings = 0;
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      crossings += static_cast<std::int64_t>(mid - i);
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return crossings;
}

std::int64_t sort_count(std::vector<int>& a, std::vector<int>& tmp,
                        std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t c = sort_count(a, tmp, lo, mid);
  c += sort_count(a, tmp, mid, hi);
  c += merge_count(a, tmp, lo, mid, hi);
  return c;
}

int parse_int_token(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("bad token '" + std::string(token) + "'");
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::domain_error("identity: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw std::domain_error("reversal: n must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

std::int64_t inv(const Permutation& p) {
  std::vector<int> a = p.word();
  std::vector<int> tmp(a.size());
  return sort_count(a, tmp, 0, a.size());
}

std::int64_t winv(const Permutation& p) {
  const int n = p.size();
  std::int64_t squares = 0, dot = 0;
  for (int i = 1; i <= n; ++i) {
    squares += static_cast<std::int64_t>(i) * i;
    dot += static_cast<std::int64_t>(i) * p(i);
  }
  return squares - dot;
}

std::int64_t cwinv(const Permutation& p) {
  return static_cast<std::int64_t>(p.size()) * inv(p) - 2 * winv(p);
}

StatTriple stat_triple(const Permutation& p) {
  StatTriple s;
  s.inv = inv(p);
  s.winv = winv(p);
  s.cwinv = static_cast<std::int64_t>(p.size()) * s.inv - 2 * s.winv;
  return s;
}

Permutation rotate(const Permutation& p, int j) {
  const int n = p.size();
  if (j < 0 || j >= n)
    throw std::domain_error("rotate: shift " + std::to_string(j) +
                            " out of [0," + std::to_string(n) + ")");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = p.word()[static_cast<std::size_t>((i + j) % n)];
  return Permutation(std::move(w));
}

std::int64_t inv_rotation_delta(const Permutation& p) {
  return static_cast<std::int64_t>(p.size()) + 1 - 2 * p(1);
}

Permutation left_multiply_adjacent(const Permutation& p, int i) {
  const int n = p.size();
  if (i < 1 || i >= n)
    throw std::domain_error("left_multiply_adjacent: index " + std::to_string(i) +
                            " out of [1," + std::to_string(n) + ")");
  std::vector<int> w = p.word();
  for (auto& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return Permutation(std::move(w));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::domain_error("compose: size mismatch");
  const int n = p.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = p(q(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(p(i)) - 1] = i;
  return Permutation(std::move(w));
}

double cos_angle(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::domain_error("cos_angle: requires n >= 2");
  // Both vectors contain the same multiset of coordinates, so the norms agree
  // and cos reduces to dot / sum(i^2).
  std::int64_t squares = 0, dot = 0;
  for (int i = 1; i <= n; ++i) {
    squares += static_cast<std::int64_t>(i) * i;
    dot += static_cast<std::int64_t>(i) * p(i);
  }
  return static_cast<double>(dot) / static_cast<double>(squares);
}

std::string to_string(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p.word()) out += static_cast<char>('0' + v);
  } else {
    for (std::size_t i = 0; i < p.word().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.word()[i]);
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty permutation word");

  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      w.push_back(parse_int_token(text.substr(start, end - start)));
      start = end + 1;
      if (end == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("bad token '") + c + "' in digit word");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

PackedWord PackedWord::pack(const Permutation& p) {
  if (p.size() > max_size)
    throw std::domain_error("PackedWord: n=" + std::to_string(p.size()) +
                            " exceeds packed cap of 16");
  PackedWord w(0, p.size());
  for (int i = 0; i < p.size(); ++i) w.set(i, p(i + 1) - 1);
  return w;
}

Permutation PackedWord::unpack() const {
  std::vector<int> w(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) w[static_cast<std::size_t>(i)] = get(i) + 1;
  return Permutation(std::move(w));
}

}  // namespace cycsort
