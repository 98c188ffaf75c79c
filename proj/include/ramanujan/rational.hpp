#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ramanujan {

using Integer = mpz_class;
// GMP keeps mpq_class canonical (gcd-reduced, positive denominator) after
// every arithmetic operation; make_rational handles raw construction.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "num" or "num/den" with an optional leading sign.
Rational parse_rational(std::string_view text);

// C(a, b), zero when b < 0 or b > a.
Integer binomial(long a, long b);

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace ramanujan
