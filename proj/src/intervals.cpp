#include "rearrange/intervals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rearrange {

namespace {

// Digit-by-digit so that leading zeros never trigger octal parsing.
Rat parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  Rat num = 0, den = 1;
  bool saw_dot = false, saw_digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (saw_dot) throw std::invalid_argument("malformed number: " + s);
      saw_dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      num = num * 10 + (s[i] - '0');
      if (saw_dot) den *= 10;
      saw_digit = true;
    } else {
      throw std::invalid_argument("malformed number: " + s);
    }
  }
  if (!saw_digit) throw std::invalid_argument("malformed number: " + s);
  Rat r = num / den;
  return neg ? -r : r;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat num = parse_decimal(s.substr(0, slash));
    Rat den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return num / den;
  }
  return parse_decimal(s);
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  if (denominator(r) == 1)
    os << numerator(r);
  else
    os << numerator(r) << "/" << denominator(r);
  return os.str();
}

IntervalSet::IntervalSet(std::vector<Piece> pieces) {
  for (auto& [a, b] : pieces) {
    if (a > b) throw std::invalid_argument("interval with a > b");
    if (a < 0 || b > 1) throw std::invalid_argument("interval outside [0,1]");
  }
  std::sort(pieces.begin(), pieces.end());
  for (auto& p : pieces) {
    if (p.first == p.second) continue;  // measure zero
    if (!pieces_.empty() && p.first <= pieces_.back().second)
      pieces_.back().second = std::max(pieces_.back().second, p.second);
    else
      pieces_.push_back(std::move(p));
  }
}

IntervalSet IntervalSet::interval(Rat a, Rat b) {
  return IntervalSet({{std::move(a), std::move(b)}});
}

Rat IntervalSet::length() const {
  Rat total = 0;
  for (const auto& [a, b] : pieces_) total += b - a;
  return total;
}

bool IntervalSet::contains(const Rat& x) const {
  for (const auto& [a, b] : pieces_)
    if (a <= x && x <= b) return true;
  return false;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Piece> out;
  for (const auto& [a, b] : pieces_)
    for (const auto& [c, d] : other.pieces_) {
      Rat lo = std::max(a, c), hi = std::min(b, d);
      if (lo < hi) out.push_back({lo, hi});
    }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Piece> out = pieces_;
  out.insert(out.end(), other.pieces_.begin(), other.pieces_.end());
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement_in_unit() const {
  std::vector<Piece> out;
  Rat cursor = 0;
  for (const auto& [a, b] : pieces_) {
    if (cursor < a) out.push_back({cursor, a});
    cursor = b;
  }
  if (cursor < 1) out.push_back({cursor, Rat(1)});
  return IntervalSet(std::move(out));
}

Rat IntervalSet::distance(const IntervalSet& other) const {
  const IntervalSet common = intersect(other);
  return length() + other.length() - 2 * common.length();
}

bool IntervalSet::interior_disjoint(const IntervalSet& other) const {
  return intersect(other).empty();
}

}  // namespace rearrange
