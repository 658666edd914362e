#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "rearrange/errors.hpp"
#include "rearrange/ranks.hpp"
#include "rearrange/rng.hpp"

using namespace rearrange;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace

TEST_CASE("initial_ranks worked examples") {
  CHECK(initial_ranks(std::vector<double>{0.9, 0.5, 0.7}) ==
        RankTuple{{1, 2, 2}});
  CHECK(initial_ranks(std::vector<double>{0.8, 0.6, 0.4, 0.2}) ==
        RankTuple{{1, 2, 3, 4}});
  CHECK(initial_ranks(std::vector<double>{0.1, 0.2, 0.3}) ==
        RankTuple{{1, 1, 1}});
  CHECK_THROWS_AS(initial_ranks(std::vector<double>{0.3, 0.3}), TieError);
}

TEST_CASE("rank_array worked examples") {
  auto id3 = rank_array(Permutation::identity(3));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      CHECK(id3.at(j, k) == 1 + std::min(k, j - 1));
  CHECK(id3.diagonal() == RankTuple{{1, 2, 3}});

  auto r = rank_array(Permutation({3, 1, 2}));
  CHECK(r.diagonal() == RankTuple{{1, 1, 2}});
  CHECK(r.at(1, 3) == 3);
  CHECK(r.at(2, 3) == 1);
  CHECK(r.at(3, 3) == 2);
}

TEST_CASE("rank array satisfies the four structural properties, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) {
      auto rho = rank_array(s);
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          const int v = rho.at(j, k);
          // (i) range; upper entries capped at k; last column is s itself.
          REQUIRE(v >= 1);
          REQUIRE(v <= k + 1);
          if (j <= k) REQUIRE(v <= k);
        }
        REQUIRE(rho.at(j, n) == s(j));
      }
      // (ii) upper values in a column are distinct.
      for (int k = 1; k <= n; ++k)
        for (int j1 = 1; j1 <= k; ++j1)
          for (int j2 = j1 + 1; j2 <= k; ++j2)
            REQUIRE(rho.at(j1, k) != rho.at(j2, k));
      // (iii) as the stated biconditional.
      for (int k = 2; k <= n; ++k)
        for (int j = 1; j < k; ++j)
          REQUIRE((rho.at(k, k) < rho.at(j, k)) ==
                  (rho.at(k, k) <= rho.at(j, k - 1)));
      // (iv) the counting identity.
      for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k)
          for (int kp = k; kp <= n; ++kp) {
            int inc = 0;
            for (int l = k + 1; l <= kp; ++l)
              if (rho.at(l, l) <= rho.at(j, l - 1)) ++inc;
            REQUIRE(rho.at(j, kp) == rho.at(j, k) + inc);
          }
    }
  }
}

TEST_CASE("extend_row worked examples") {
  CHECK(extend_row(1, 1, std::vector<int>{1, 1}) == 3);
  CHECK(extend_row(1, 1, std::vector<int>{2, 3}) == 1);
  // s = (3,1,2): row 1 from column 1 with diagonal (1,2) reaches s_1 = 3.
  CHECK(extend_row(1, 1, std::vector<int>{1, 2}) == 3);
  CHECK_THROWS_AS(extend_row(3, 2, std::vector<int>{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend_row(1, 1, std::vector<int>{5}),
                  std::invalid_argument);
}

TEST_CASE("column_restrict worked examples") {
  CHECK(column_restrict(std::vector<int>{3, 1, 2}, 1, 1) == 1);
  CHECK(column_restrict(std::vector<int>{3, 1, 2}, 3, 2) == 2);
  CHECK_THROWS_AS(column_restrict(std::vector<int>{2, 2}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(column_restrict(std::vector<int>{2, 1}, 1, 4),
                  std::invalid_argument);
}

TEST_CASE("extend_row and column_restrict agree with the array, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) {
      auto rho = rank_array(s);
      auto diag = rho.diagonal();
      for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k)
          for (int kp = k; kp <= n; ++kp) {
            std::vector<int> between(diag.ranks.begin() + k,
                                     diag.ranks.begin() + kp);
            REQUIRE(extend_row(rho.at(j, k), k, between) == rho.at(j, kp));
            std::vector<int> col(static_cast<size_t>(std::max(j, k)));
            for (int i = 1; i <= std::max(j, k); ++i)
              col[static_cast<size_t>(i - 1)] = rho.at(i, kp);
            REQUIRE(column_restrict(col, j, k) == rho.at(j, k));
          }
    }
  }
}

TEST_CASE("restrict then extend round-trips over S_4") {
  for (const auto& s : all_permutations(4)) {
    auto rho = rank_array(s);
    auto diag = rho.diagonal();
    for (int j = 1; j <= 4; ++j)
      for (int k = j; k <= 4; ++k)
        for (int kp = k; kp <= 4; ++kp) {
          std::vector<int> col(static_cast<size_t>(std::max(j, k)));
          for (int i = 1; i <= std::max(j, k); ++i)
            col[static_cast<size_t>(i - 1)] = rho.at(i, kp);
          int restricted = column_restrict(col, j, k);
          std::vector<int> between(diag.ranks.begin() + k,
                                   diag.ranks.begin() + kp);
          REQUIRE(extend_row(restricted, k, between) == rho.at(j, kp));
        }
  }
}

TEST_CASE("permutation_from_initial_ranks worked examples") {
  CHECK(permutation_from_initial_ranks(RankTuple{{1, 1, 1, 1}}) ==
        Permutation({4, 3, 2, 1}));
  CHECK(permutation_from_initial_ranks(RankTuple{{1, 2, 3, 4}}) ==
        Permutation::identity(4));
  CHECK(permutation_from_initial_ranks(RankTuple{{1, 1, 2}}) ==
        Permutation({3, 1, 2}));
  CHECK_THROWS_AS(permutation_from_initial_ranks(RankTuple{{1, 3}}),
                  std::invalid_argument);
}

TEST_CASE("permutation <-> initial ranks is a bijection, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& s : all_permutations(n))
      REQUIRE(permutation_from_initial_ranks(rank_array(s).diagonal()) == s);
}

TEST_CASE("descending_permutation worked examples and round trip") {
  auto [sorted, delta] = descending_permutation(std::vector<double>{0.3, 0.9, 0.1});
  CHECK(sorted == std::vector<double>{0.9, 0.3, 0.1});
  CHECK(delta == Permutation({2, 1, 3}));

  auto [s2, d2] = descending_permutation(std::vector<double>{0.9, 0.5, 0.2});
  CHECK(d2 == Permutation::identity(3));

  RngStream rng(7, 0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> a(6);
    for (auto& v : a) v = rng.next_double();
    auto [sorted_a, d] = descending_permutation(a);
    CHECK(std::is_sorted(sorted_a.rbegin(), sorted_a.rend()));
    CHECK(apply_permutation(sorted_a, d.inverse()) == a);
    CHECK(apply_permutation(a, d) == sorted_a);
  }
  CHECK_THROWS_AS(descending_permutation(std::vector<double>{1.0, 1.0}),
                  TieError);
}

TEST_CASE("ranks of a projected state match the array diagonal, S_4") {
  RngStream rng(11, 0);
  for (const auto& s : all_permutations(4)) {
    std::vector<double> a(4);
    for (auto& v : a) v = rng.next_double();
    std::sort(a.rbegin(), a.rend());
    auto y = apply_permutation(a, s);
    REQUIRE(initial_ranks(y) == rank_array(s).diagonal());
  }
}
