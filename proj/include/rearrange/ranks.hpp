#pragma once

#include <span>
#include <utility>
#include <vector>

namespace rearrange {

// A bijection of {1..n}. All interfaces speak 1-indexed positions and
// values; only the private storage is 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }

  // s_i, 1-indexed.
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }

  Permutation inverse() const;

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Initial ranks (r_1..r_n) with r_k in {1..k}.
struct RankTuple {
  std::vector<int> ranks;

  int n() const { return static_cast<int>(ranks.size()); }
  bool operator==(const RankTuple&) const = default;
};

// The full n-by-n array of partial ranks of a permutation. Entry (j,k) is
// one plus the number of i <= k with s_i < s_j; the diagonal holds the
// initial ranks and column n reproduces the permutation itself. Entries
// below the diagonal (j > k) are kept so the full value range {1..k+1} is
// observable.
class RankArray {
 public:
  RankArray(int n, std::vector<int> entries);

  int n() const { return n_; }

  // rho_{j,k}, 1-indexed.
  int at(int j, int k) const {
    return entries_[static_cast<size_t>(j - 1) * n_ + (k - 1)];
  }

  RankTuple diagonal() const;

 private:
  int n_;
  std::vector<int> entries_;  // row-major
};

// Ranks of y_k among y_1..y_k in descending order: 1 + #{i < k : y_i > y_k}.
// Duplicate entries raise TieError.
RankTuple initial_ranks(std::span<const double> y);

// The array of partial ranks of s.
RankArray rank_array(const Permutation& s);

// Walks rho_{j,k} rightward to rho_{j,k'} given the diagonal entries
// rho_{k+1,k+1}..rho_{k',k'}: each step increments iff the new diagonal
// entry is <= the current value.
int extend_row(int rho_jk, int k, std::span<const int> diagonal);

// Recovers rho_{j,k} from the upper entries rho_{1,k'}..rho_{m,k'} of a
// column to the right (j, k <= m): counts entries above position k that
// are smaller than entry j.
int column_restrict(std::span<const int> column, int j, int k);

// The unique permutation whose rank-array diagonal equals r. Inverse of
// taking the diagonal; a bijection between permutations and rank tuples.
Permutation permutation_from_initial_ranks(const RankTuple& r);

// Sorts a into descending order and returns the permutation delta with
// sorted[i] = a[delta_i]. Ties raise TieError.
std::pair<std::vector<double>, Permutation> descending_permutation(
    std::span<const double> a);

// (x^s)_i = x_{s_i}.
std::vector<double> apply_permutation(std::span<const double> x,
                                      const Permutation& s);

}  // namespace rearrange
