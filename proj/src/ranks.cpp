#include "rearrange/ranks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rearrange/errors.hpp"

namespace rearrange {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw std::invalid_argument("permutation must be nonempty");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("images are not a bijection of {1..n}");
    seen[static_cast<size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

RankArray::RankArray(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<size_t>(n_) * n_)
    throw std::invalid_argument("rank array needs n*n entries");
}

RankTuple RankArray::diagonal() const {
  std::vector<int> d(static_cast<size_t>(n_));
  for (int k = 1; k <= n_; ++k) d[static_cast<size_t>(k - 1)] = at(k, k);
  return RankTuple{std::move(d)};
}

namespace {

void check_distinct(std::span<const double> v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) throw TieError("tied values at indices " +
                                       std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1));
}

}  // namespace

RankTuple initial_ranks(std::span<const double> y) {
  if (y.empty()) throw std::invalid_argument("empty sequence");
  check_distinct(y);
  std::vector<int> r(y.size());
  for (size_t k = 0; k < y.size(); ++k) {
    int above = 0;
    for (size_t i = 0; i < k; ++i)
      if (y[i] > y[k]) ++above;
    r[k] = 1 + above;
  }
  return RankTuple{std::move(r)};
}

RankArray rank_array(const Permutation& s) {
  const int n = s.n();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      int below = 0;
      for (int i = 1; i <= k; ++i)
        if (s(i) < s(j)) ++below;
      e[static_cast<size_t>(j - 1) * n + (k - 1)] = 1 + below;
    }
  return RankArray(n, std::move(e));
}

int extend_row(int rho_jk, int k, std::span<const int> diagonal) {
  if (k < 1 || rho_jk < 1 || rho_jk > k)
    throw std::invalid_argument("row entry out of range {1..k}");
  int cur = rho_jk;
  int col = k;
  for (int d : diagonal) {
    ++col;
    if (d < 1 || d > col)
      throw std::invalid_argument("diagonal entry out of range");
    if (d <= cur) ++cur;
  }
  return cur;
}

int column_restrict(std::span<const int> column, int j, int k) {
  const int m = static_cast<int>(column.size());
  if (j < 1 || j > m || k < 1 || k > m)
    throw std::invalid_argument("need column entries through rows j and k");
  for (int i = 0; i < m; ++i) {
    if (column[static_cast<size_t>(i)] < 1)
      throw std::invalid_argument("column entries must be positive");
    for (int t = i + 1; t < m; ++t)
      if (column[static_cast<size_t>(i)] == column[static_cast<size_t>(t)])
        throw std::invalid_argument("column entries must be distinct");
  }
  int below = 0;
  for (int i = 1; i <= k; ++i)
    if (column[static_cast<size_t>(i - 1)] < column[static_cast<size_t>(j - 1)])
      ++below;
  return 1 + below;
}

Permutation permutation_from_initial_ranks(const RankTuple& r) {
  const int n = r.n();
  if (n == 0) throw std::invalid_argument("empty rank tuple");
  for (int k = 1; k <= n; ++k) {
    const int v = r.ranks[static_cast<size_t>(k - 1)];
    if (v < 1 || v > k)
      throw std::invalid_argument("rank entry " + std::to_string(k) +
                                  " outside {1..k}");
  }
  // Insert arrival k at descending position r_k; the final list position of
  // an arrival is its image under the permutation.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k)
    order.insert(order.begin() + (r.ranks[static_cast<size_t>(k - 1)] - 1), k);
  std::vector<int> images(static_cast<size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    images[static_cast<size_t>(order[static_cast<size_t>(pos - 1)] - 1)] = pos;
  return Permutation(std::move(images));
}

std::pair<std::vector<double>, Permutation> descending_permutation(
    std::span<const double> a) {
  if (a.empty()) throw std::invalid_argument("empty sequence");
  check_distinct(a);
  const int n = static_cast<int>(a.size());
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return a[static_cast<size_t>(i - 1)] > a[static_cast<size_t>(j - 1)];
  });
  std::vector<double> sorted(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    sorted[static_cast<size_t>(i)] = a[static_cast<size_t>(idx[static_cast<size_t>(i)] - 1)];
  return {std::move(sorted), Permutation(std::move(idx))};
}

std::vector<double> apply_permutation(std::span<const double> x,
                                      const Permutation& s) {
  if (static_cast<int>(x.size()) != s.n())
    throw std::invalid_argument("length mismatch");
  std::vector<double> out(x.size());
  for (int i = 1; i <= s.n(); ++i)
    out[static_cast<size_t>(i - 1)] = x[static_cast<size_t>(s(i)) - 1];
  return out;
}

}  // namespace rearrange
