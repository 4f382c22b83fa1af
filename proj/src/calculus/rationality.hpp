#pragma once

#include "euclid/symreal.hpp"

namespace euclid::calculus::rationality {

// Propagation rules for rationality of point values. `zero` flags a value
// known to be exactly 0.

inline Rationality add(Rationality a, Rationality b) {
  using enum Rationality;
  if (a == rational && b == rational) return rational;
  if ((a == rational && b == irrational) || (a == irrational && b == rational)) return irrational;
  return unknown;
}

inline Rationality mul(Rationality a, bool a_zero, Rationality b, bool b_zero) {
  using enum Rationality;
  if ((a == rational && a_zero) || (b == rational && b_zero)) return rational;
  return add(a, b);
}

inline Rationality div(Rationality a, bool a_zero, Rationality b) {
  using enum Rationality;
  if (a == rational && a_zero) return rational;
  return add(a, b);
}

inline Rationality pow(Rationality a, long n) {
  using enum Rationality;
  if (n == 0 || a == rational) return rational;
  if (a == irrational && (n == 1 || n == -1)) return irrational;
  return unknown;
}

/// sin, cos, exp, log: rational at their exceptional point (0, or 1 for
/// log), transcendental at every other rational argument.
inline Rationality transcendental(Rationality a, bool at_exceptional_point) {
  using enum Rationality;
  if (a != rational) return unknown;
  return at_exceptional_point ? rational : irrational;
}

}  // namespace euclid::calculus::rationality
