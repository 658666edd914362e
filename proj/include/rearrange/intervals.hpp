#pragma once

#include <utility>
#include <vector>

#include "rearrange/rational.hpp"

namespace rearrange {

// A finite union of closed intervals inside [0,1], kept sorted and
// interior-disjoint. Zero-length components are dropped; equality and all
// measures are exact.
class IntervalSet {
 public:
  using Piece = std::pair<Rat, Rat>;

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Piece> pieces);

  static IntervalSet unit() { return interval(0, 1); }
  static IntervalSet interval(Rat a, Rat b);

  bool empty() const { return pieces_.empty(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  Rat length() const;
  bool contains(const Rat& x) const;

  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet complement_in_unit() const;

  // Symmetric-difference measure.
  Rat distance(const IntervalSet& other) const;

  // Interior-disjointness: shared endpoints are allowed.
  bool interior_disjoint(const IntervalSet& other) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace rearrange
