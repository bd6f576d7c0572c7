#pragma once

// Exact rational scalars. Everything in the library is computed over Q;
// doubles only appear when a value is printed for humans.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace meshpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "n/d" or "n" (decimal, optional leading sign).
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "-28/1".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Rational abs(const Rational& q);

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Integer power by repeated squaring; exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace meshpoly
