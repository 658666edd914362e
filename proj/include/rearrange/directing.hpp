#pragma once

#include <vector>

#include "rearrange/intervals.hpp"
#include "rearrange/rational.hpp"

namespace rearrange {

// A continuous piecewise-linear function on [0,1], the representation used
// for every directing function here. Arbitrary measurable orderings are out
// of scope: orderings not induced by a function (possible for pairs only)
// are not representable. Nodes are exact rationals; no linear piece may be
// constant, so every level set has measure zero.
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn(std::vector<Rat> breakpoints, std::vector<Rat> values);

  static PiecewiseLinearFn identity();

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return vs_; }
  int piece_count() const { return static_cast<int>(xs_.size()) - 1; }

  Rat evaluate(const Rat& x) const;
  double evaluate_at(double x) const { return to_double(evaluate(Rat(x))); }

  Rat min_value() const;
  Rat max_value() const;

  bool operator==(const PiecewiseLinearFn&) const = default;

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> vs_;
};

// The V-shaped function with vertex at theta: descends linearly from 1 to 0
// on [0,theta], then climbs back to 1 on [theta,1]. theta = 0 degenerates
// to x, theta = 1 to 1-x.
PiecewiseLinearFn v_shape(const Rat& theta);

// Lebesgue measure of the sublevel set {u : f(u) <= t}.
Rat distribution_function(const PiecewiseLinearFn& f, const Rat& t);

// The sublevel set itself, as disjoint intervals. Its length equals the
// distribution function. Each piece contributes the half-open run where it
// sits at or below t; shared endpoints merge away.
IntervalSet filtration_set(const PiecewiseLinearFn& f, const Rat& t);

// The unique order-equivalent representative that preserves Lebesgue
// measure: u -> Leb{v : f(v) < f(u)}. Idempotent; f_theta and the identity
// are fixed points.
PiecewiseLinearFn canonicalize(const PiecewiseLinearFn& f);

// True iff the sublevel measure of every level t equals t.
bool preserves_measure(const PiecewiseLinearFn& f);

// Double-precision view for sampling loops; node coordinates are the
// rounded exact nodes, so two functions with equal exact nodes evaluate
// bit-identically.
class PlfEvaluator {
 public:
  explicit PlfEvaluator(const PiecewiseLinearFn& f);

  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> vs_;
  std::vector<double> slopes_;
};

}  // namespace rearrange
