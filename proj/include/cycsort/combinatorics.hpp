#ifndef CYCSORT_COMBINATORICS_HPP
#define CYCSORT_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>

namespace cycsort {

/// n! as an exact 64-bit value; defined for 0 <= n <= 20.
constexpr std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial: n out of [0,20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Binomial coefficient C(n, k), exact. Returns 0 for k < 0 or k > n.
constexpr std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: numerator is divisible by i at each step
  }
  return r;
}

/// Integer square root: largest s with s*s <= x.
constexpr std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw std::domain_error("isqrt: negative argument");
  if (x < 2) return x;
  std::int64_t s = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(x)));
  while (s > 0 && s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

}  // namespace cycsort

#endif
