#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cycsort/combinatorics.hpp"
#include "cycsort/cosets.hpp"
#include "oracles.hpp"

using cycsort::CosetIndex;
using cycsort::CosetRep;
using cycsort::Cycle;
using cycsort::Permutation;
using cycsort::Rational;

TEST_CASE("canonicalize rotates value 1 to the front") {
  CHECK(cycsort::canonicalize(Permutation({3, 1, 2})).perm() == Permutation({1, 2, 3}));
  CHECK(cycsort::canonicalize(Permutation({1, 4, 2, 3})).perm() ==
        Permutation({1, 4, 2, 3}));
  CHECK(cycsort::canonicalize(Permutation({2, 1, 4, 3})).perm() ==
        Permutation({1, 4, 3, 2}));
  CHECK_THROWS_AS(CosetRep(Permutation({2, 1})), std::invalid_argument);
  // all rotations of a word share one canonical rep
  std::mt19937_64 eng(0);
  for (int c = 0; c < 200; ++c) {
    const Permutation p = oracles::random_permutation(7, eng);
    const CosetRep r = cycsort::canonicalize(p);
    for (int j = 0; j < 7; ++j)
      CHECK(cycsort::canonicalize(cycsort::rotate(p, j)) == r);
  }
}

TEST_CASE("rank and unrank are mutually inverse") {
  CHECK(cycsort::rank(cycsort::canonicalize(Permutation::identity(5))).value == 0);
  CHECK(cycsort::rank(CosetRep(Permutation({1, 2, 3}))).value == 0);
  CHECK(cycsort::rank(CosetRep(Permutation({1, 3, 2}))).value == 1);
  CHECK(cycsort::unrank(CosetIndex{0}, 3).perm() == Permutation({1, 2, 3}));
  CHECK(cycsort::unrank(CosetIndex{1}, 3).perm() == Permutation({1, 3, 2}));
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t classes = cycsort::factorial(n - 1);
    std::set<std::vector<int>> seen;
    for (std::uint64_t k = 0; k < classes; ++k) {
      const CosetRep r = cycsort::unrank(CosetIndex{k}, n);
      CHECK(cycsort::rank(r).value == k);
      seen.insert(r.perm().word());
    }
    CHECK(seen.size() == classes);
  }
  // ranks are dense: every canonical rep of S5 appears
  oracles::for_each_permutation(5, [](const Permutation& p) {
    const CosetRep r = cycsort::canonicalize(p);
    const CosetIndex i = cycsort::rank(r);
    CHECK(i.value < 24);
    CHECK(cycsort::unrank(i, 5) == r);
  });
  CHECK_THROWS_AS(cycsort::unrank(CosetIndex{24}, 5), std::domain_error);
}

TEST_CASE("minv on pinned words") {
  CHECK(cycsort::minv(Permutation({1, 2, 3, 4})) == 0);
  CHECK(cycsort::minv(Permutation::reversal(5)) == 4);
  CHECK(cycsort::minv(Permutation::reversal(12)) == 30);
}

TEST_CASE("minv equals the naive rotation minimum") {
  for (int n = 1; n <= 7; ++n)
    oracles::for_each_permutation(n, [](const Permutation& p) {
      CHECK(cycsort::minv(p) == oracles::minv(p));
    });
  std::mt19937_64 eng(1);
  for (int n = 8; n <= 12; ++n)
    for (int c = 0; c < 1000; ++c) {
      const Permutation p = oracles::random_permutation(n, eng);
      CHECK(cycsort::minv(p) == oracles::minv(p));
    }
}

TEST_CASE("minv_argmin returns the smallest minimizing shift") {
  CHECK(cycsort::minv_argmin(Permutation::identity(4)) == 0);
  std::mt19937_64 eng(2);
  for (int n = 2; n <= 9; ++n)
    for (int c = 0; c < 300; ++c) {
      const Permutation p = oracles::random_permutation(n, eng);
      const int j = cycsort::minv_argmin(p);
      const std::int64_t m = cycsort::minv(p);
      CHECK(oracles::inv(cycsort::rotate(p, j)) == m);
      for (int jj = 0; jj < j; ++jj)
        CHECK(oracles::inv(cycsort::rotate(p, jj)) > m);
    }
}

TEST_CASE("heavy-tailed words are exactly the rotation minimizers") {
  CHECK(cycsort::is_heavy_tailed(Permutation({1, 2, 3})));
  CHECK_FALSE(cycsort::is_heavy_tailed(Permutation({3, 2, 1})));
  CHECK(cycsort::is_heavy_tailed(Permutation({6, 5, 4, 3, 12, 2, 11, 1, 10, 9, 8, 7})));
  for (int n = 1; n <= 7; ++n)
    oracles::for_each_permutation(n, [](const Permutation& p) {
      CHECK(cycsort::is_heavy_tailed(p) == (oracles::inv(p) == oracles::minv(p)));
    });
}

TEST_CASE("cycles: equality up to rotation, parse and print") {
  CHECK(Cycle({1, 2, 3, 4}) == Cycle({3, 4, 1, 2}));
  CHECK_FALSE(Cycle({1, 2, 3, 4}) == Cycle({1, 2, 4, 3}));
  CHECK(cycsort::to_string(Cycle({1, 2, 4, 3})) == "(1243)");
  CHECK(cycsort::to_string(Cycle({10, 1, 2, 3, 4, 5, 6, 7, 8, 9})) ==
        "(10,1,2,3,4,5,6,7,8,9)");
  CHECK(cycsort::parse_cycle("(1,2,4,3)") == Cycle({1, 2, 4, 3}));
  CHECK(cycsort::parse_cycle("(1243)") == Cycle({1, 2, 4, 3}));
  CHECK_THROWS_AS(cycsort::parse_cycle("1,2,3"), std::invalid_argument);
  CHECK(Cycle::from_word(Permutation({2, 3, 1})).to_word() == Permutation({2, 3, 1}));
}

TEST_CASE("distance on pinned cycles") {
  const Cycle g({1, 2, 3, 4});
  CHECK(cycsort::distance(g, g) == 0);
  CHECK(cycsort::distance(Cycle({1, 2, 3, 4}), Cycle({1, 4, 3, 2})) == 2);
  CHECK_THROWS_AS(cycsort::distance(Cycle({1, 2, 3}), Cycle({1, 2, 3, 4})),
                  std::domain_error);
}

TEST_CASE("distance equals minv of the double coset, brute force") {
  std::mt19937_64 eng(3);
  for (int n = 2; n <= 7; ++n)
    for (int c = 0; c < 300; ++c) {
      const Permutation a = oracles::random_permutation(n, eng);
      const Permutation b = oracles::random_permutation(n, eng);
      std::int64_t best = -1;
      for (int j = 0; j < n; ++j) {
        const Permutation tau =
            cycsort::compose(cycsort::rotate(a, j), cycsort::inverse(b));
        const std::int64_t v = oracles::inv(tau);
        if (best < 0 || v < best) best = v;
      }
      CHECK(cycsort::distance(Cycle::from_word(a), Cycle::from_word(b)) == best);
      // distance from the canonical cycle reduces to minv
      CHECK(cycsort::distance(Cycle::from_word(Permutation::identity(n)),
                              Cycle::from_word(b)) == oracles::minv(b));
    }
}

TEST_CASE("distance_witness reports a minimizer and every minimizing shift") {
  const auto w = cycsort::distance_witness(Cycle({1, 2, 3, 4}), Cycle({1, 4, 3, 2}));
  CHECK(w.distance == 2);
  CHECK(oracles::inv(w.witness) == 2);
  CHECK(!w.shifts.empty());
  std::mt19937_64 eng(4);
  for (int c = 0; c < 200; ++c) {
    const Permutation a = oracles::random_permutation(6, eng);
    const Permutation b = oracles::random_permutation(6, eng);
    const auto dw = cycsort::distance_witness(Cycle::from_word(a), Cycle::from_word(b));
    CHECK(oracles::inv(dw.witness) == dw.distance);
    std::set<int> shifts(dw.shifts.begin(), dw.shifts.end());
    CHECK(shifts.size() == dw.shifts.size());
    for (int j = 0; j < 6; ++j) {
      const Permutation tau =
          cycsort::compose(cycsort::rotate(a, j), cycsort::inverse(b));
      CHECK((oracles::inv(tau) == dw.distance) == (shifts.count(j) == 1));
    }
    CHECK(cycsort::compose(cycsort::rotate(a, dw.shifts.front()),
                           cycsort::inverse(b)) == dw.witness);
  }
}

TEST_CASE("coset_mean_inv: closed form vs rotation average") {
  CHECK(cycsort::coset_mean_inv(Permutation::identity(4)) == Rational(10, 4));
  CHECK(cycsort::coset_mean_inv(Permutation::reversal(4)) == Rational(14, 4));
  for (int n = 1; n <= 6; ++n)
    oracles::for_each_permutation(n, [&](const Permutation& p) {
      std::int64_t total = 0;
      for (int j = 0; j < n; ++j) total += oracles::inv(cycsort::rotate(p, j));
      CHECK(cycsort::coset_mean_inv(p) == Rational(total, n));
    });
}

TEST_CASE("coset_mean_inv maximum over S_n") {
  for (int n = 1; n <= 7; ++n) {
    Rational best(0);
    oracles::for_each_permutation(n, [&](const Permutation& p) {
      const Rational m = cycsort::coset_mean_inv(p);
      if (best < m) best = m;
    });
    CHECK(best == Rational(static_cast<std::int64_t>(2 * n - 1) * (n - 1), 6));
  }
}

TEST_CASE("prefix_sum_witness satisfies its contract") {
  const Permutation id4 = Permutation::identity(4);
  for (int k = 0; k <= 4; ++k)
    CHECK(cycsort::prefix_sum_witness(id4, id4, k) == id4);
  const Permutation tau =
      cycsort::prefix_sum_witness(Permutation::reversal(4), id4, 2);
  CHECK(tau(1) + tau(2) <= 5);
  CHECK_THROWS_AS(cycsort::prefix_sum_witness(id4, Permutation::identity(3), 1),
                  std::domain_error);
  CHECK_THROWS_AS(cycsort::prefix_sum_witness(id4, id4, 5), std::domain_error);
  std::mt19937_64 eng(5);
  for (int n = 2; n <= 8; ++n)
    for (int c = 0; c < 500; ++c) {
      const Permutation p1 = oracles::random_permutation(n, eng);
      const Permutation p2 = oracles::random_permutation(n, eng);
      const int k = static_cast<int>(eng() % static_cast<std::uint64_t>(n + 1));
      const Permutation t = cycsort::prefix_sum_witness(p1, p2, k);
      std::int64_t prefix = 0;
      for (int i = 1; i <= k; ++i) prefix += t(i);
      CHECK(2 * prefix <= static_cast<std::int64_t>(k) * (n + 1));
      bool member = false;
      for (int j = 0; j < n && !member; ++j)
        member = cycsort::compose(cycsort::rotate(p1, j), cycsort::inverse(p2)) == t;
      CHECK(member);
    }
}

TEST_CASE("prefix_inv_bound dominates inv") {
  const Permutation id5 = Permutation::identity(5);
  CHECK(cycsort::prefix_inv_bound(id5, 0) == 10);
  CHECK(cycsort::prefix_inv_bound(id5, 5) == 10);
  CHECK(cycsort::prefix_inv_bound(Permutation({2, 1, 4, 3}), 2) == 2);
  CHECK_THROWS_AS(cycsort::prefix_inv_bound(id5, 6), std::domain_error);
  for (int n = 1; n <= 7; ++n)
    oracles::for_each_permutation(n, [&](const Permutation& t) {
      for (int k = 0; k <= n; ++k)
        CHECK(oracles::inv(t) <= cycsort::prefix_inv_bound(t, k));
    });
}
