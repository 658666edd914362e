#include "rearrange/directing.hpp"

#include <algorithm>
#include <stdexcept>

namespace rearrange {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Rat> breakpoints,
                                     std::vector<Rat> values)
    : xs_(std::move(breakpoints)), vs_(std::move(values)) {
  if (xs_.size() < 2 || xs_.size() != vs_.size())
    throw std::invalid_argument("need matching breakpoints and values, >= 2");
  if (xs_.front() != 0 || xs_.back() != 1)
    throw std::invalid_argument("breakpoints must start at 0 and end at 1");
  for (size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (!(xs_[i] < xs_[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
    if (vs_[i] == vs_[i + 1])
      throw std::invalid_argument("constant piece makes the function singular");
  }
}

PiecewiseLinearFn PiecewiseLinearFn::identity() {
  return PiecewiseLinearFn({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
}

Rat PiecewiseLinearFn::evaluate(const Rat& x) const {
  if (x < 0 || x > 1) throw std::invalid_argument("argument outside [0,1]");
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  size_t i = static_cast<size_t>(it - xs_.begin());
  if (i == xs_.size()) return vs_.back();
  if (i == 0) return vs_.front();
  --i;
  if (x == xs_[i]) return vs_[i];
  return vs_[i] + (x - xs_[i]) * (vs_[i + 1] - vs_[i]) / (xs_[i + 1] - xs_[i]);
}

Rat PiecewiseLinearFn::min_value() const {
  return *std::min_element(vs_.begin(), vs_.end());
}

Rat PiecewiseLinearFn::max_value() const {
  return *std::max_element(vs_.begin(), vs_.end());
}

PiecewiseLinearFn v_shape(const Rat& theta) {
  if (theta < 0 || theta > 1)
    throw std::invalid_argument("theta outside [0,1]");
  if (theta == 0) return PiecewiseLinearFn::identity();
  if (theta == 1) return PiecewiseLinearFn({Rat(0), Rat(1)}, {Rat(1), Rat(0)});
  return PiecewiseLinearFn({Rat(0), theta, Rat(1)}, {Rat(1), Rat(0), Rat(1)});
}

Rat distribution_function(const PiecewiseLinearFn& f, const Rat& t) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  Rat total = 0;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat &va = vs[i], &vb = vs[i + 1];
    const Rat lo = std::min(va, vb), hi = std::max(va, vb);
    if (t >= hi) {
      total += xs[i + 1] - xs[i];
    } else if (t >= lo) {
      // crossing point of the level t inside this piece
      total += (t - lo) * (xs[i + 1] - xs[i]) / (hi - lo);
    }
  }
  return total;
}

IntervalSet filtration_set(const PiecewiseLinearFn& f, const Rat& t) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  std::vector<IntervalSet::Piece> pieces;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat &va = vs[i], &vb = vs[i + 1];
    const Rat lo = std::min(va, vb), hi = std::max(va, vb);
    if (t >= hi) {
      pieces.push_back({xs[i], xs[i + 1]});
    } else if (t >= lo) {
      Rat cross = xs[i] + (t - va) * (xs[i + 1] - xs[i]) / (vb - va);
      if (va <= vb)
        pieces.push_back({xs[i], cross});
      else
        pieces.push_back({cross, xs[i + 1]});
    }
  }
  return IntervalSet(std::move(pieces));
}

PiecewiseLinearFn canonicalize(const PiecewiseLinearFn& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();

  // Distinct node values, with the sublevel measure at each. Between
  // consecutive node values the measure grows affinely, so composing it
  // with f stays piecewise linear.
  std::vector<Rat> critical(vs.begin(), vs.end());
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()),
                 critical.end());
  std::vector<Rat> measure_at;
  measure_at.reserve(critical.size());
  for (const Rat& c : critical) measure_at.push_back(distribution_function(f, c));

  auto measure_of = [&](const Rat& v) {
    auto it = std::lower_bound(critical.begin(), critical.end(), v);
    return measure_at[static_cast<size_t>(it - critical.begin())];
  };

  std::vector<Rat> nx, nv;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    nx.push_back(xs[i]);
    nv.push_back(measure_of(vs[i]));
    const bool up = vs[i] < vs[i + 1];
    const Rat lo = up ? vs[i] : vs[i + 1], hi = up ? vs[i + 1] : vs[i];
    // interior crossings of other pieces' node values, in x order
    auto first = std::upper_bound(critical.begin(), critical.end(), lo);
    auto last = std::lower_bound(critical.begin(), critical.end(), hi);
    std::vector<Rat> inner(first, last);
    if (!up) std::reverse(inner.begin(), inner.end());
    for (const Rat& c : inner) {
      nx.push_back(xs[i] + (c - vs[i]) * (xs[i + 1] - xs[i]) /
                               (vs[i + 1] - vs[i]));
      nv.push_back(measure_of(c));
    }
  }
  nx.push_back(xs.back());
  nv.push_back(measure_of(vs.back()));

  // Drop nodes where the slope does not change.
  std::vector<Rat> sx{nx.front()}, sv{nv.front()};
  for (size_t i = 1; i + 1 < nx.size(); ++i) {
    const Rat left = (nv[i] - sv.back()) * (nx[i + 1] - nx[i]);
    const Rat right = (nv[i + 1] - nv[i]) * (nx[i] - sx.back());
    if (left != right) {
      sx.push_back(nx[i]);
      sv.push_back(nv[i]);
    }
  }
  sx.push_back(nx.back());
  sv.push_back(nv.back());
  return PiecewiseLinearFn(std::move(sx), std::move(sv));
}

bool preserves_measure(const PiecewiseLinearFn& f) {
  // The sublevel measure is piecewise linear in the level, so checking at
  // node values and the endpoints 0, 1 settles it everywhere.
  if (distribution_function(f, Rat(0)) != 0) return false;
  if (distribution_function(f, Rat(1)) != 1) return false;
  for (const Rat& v : f.values())
    if (v < 0 || v > 1 || distribution_function(f, v) != v) return false;
  return true;
}

PlfEvaluator::PlfEvaluator(const PiecewiseLinearFn& f) {
  for (const Rat& x : f.breakpoints()) xs_.push_back(to_double(x));
  for (const Rat& v : f.values()) vs_.push_back(to_double(v));
  for (size_t i = 0; i + 1 < xs_.size(); ++i)
    slopes_.push_back((vs_[i + 1] - vs_[i]) / (xs_[i + 1] - xs_[i]));
}

double PlfEvaluator::operator()(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  size_t i = static_cast<size_t>(it - xs_.begin());
  if (i >= xs_.size()) return vs_.back();
  if (i == 0) return vs_.front();
  --i;
  return vs_[i] + (x - xs_[i]) * slopes_[i];
}

}  // namespace rearrange
