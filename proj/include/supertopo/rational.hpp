#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supertopo {

/// Arbitrary-precision rational, always kept canonical (reduced, q > 0).
using Rational = mpq_class;

/// Serializes as "p/q" with an explicit denominator, e.g. "1/1", "0/1", "-3/4".
std::string to_string(const Rational& q);

/// Parses "p/q" or "p" (decimal integers, optional leading '-').
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace supertopo
