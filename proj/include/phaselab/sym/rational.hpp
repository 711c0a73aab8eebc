#pragma once

#include <gmpxx.h>

#include <string>

namespace phaselab::sym {

/// Exact arbitrary-precision rational. GMP keeps values canonical after arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace phaselab::sym
