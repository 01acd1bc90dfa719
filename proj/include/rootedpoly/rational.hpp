#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rootedpoly {

using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (no whitespace). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is one, otherwise "n/d".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

/// Reduced copy; mpq_class(n, d) does not reduce on construction.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace rootedpoly
