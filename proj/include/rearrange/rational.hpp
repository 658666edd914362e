#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rearrange {

// Arbitrary-precision rational. Doubles convert in exactly (every finite
// double is p/2^k), so "rational in, rational through" costs nothing in
// fidelity even when callers hand us floating point.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Parses "p/q" or a plain integer/decimal string.
Rat parse_rational(const std::string& s);

// Renders as "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& r);

}  // namespace rearrange
