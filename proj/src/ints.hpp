#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kf {

// All homological bookkeeping is done with arbitrary-precision integers;
// intermediate entries of normal-form computations are not bounded by the
// input magnitudes.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
struct Bezout {
  Int g, x, y;
};

inline Bezout ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Quotient rounded towards the nearest integer; keeps remainders small in
// Euclidean reduction steps.
inline Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  Int b2 = b < 0 ? -b : b;
  if (2 * (r < 0 ? -r : r) > b2) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace kf
