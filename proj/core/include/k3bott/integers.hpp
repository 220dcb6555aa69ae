#pragma once

// Exact arithmetic used everywhere in the library. All lattice computations
// are threshold comparisons on integers, so nothing here may round.

#include <boost/multiprecision/cpp_int.hpp>

namespace k3bott {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

// floor(p/q); cpp_int division truncates toward zero, so fix up negatives.
inline Int floor_rat(const Rat& x) {
  Int p = num(x), q = den(x);  // q > 0 in canonical form
  Int t = p / q;
  if (p % q != 0 && p < 0) --t;
  return t;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

// floor(sqrt(x)) for x >= 0
inline Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative integer");
  return boost::multiprecision::sqrt(x);
}

// Largest integer t >= 0 with t^2 <= x, for rational x >= 0.
inline Int floor_sqrt(const Rat& x) {
  if (x < 0) throw std::domain_error("floor_sqrt of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q; the integer part of the latter is within 1 of
  // the truth, so verify exactly and adjust.
  Int t = isqrt(num(x) * den(x)) / den(x);
  while (Rat((t + 1) * (t + 1)) <= x) ++t;
  while (t > 0 && Rat(t * t) > x) --t;
  return t;
}

}  // namespace k3bott
