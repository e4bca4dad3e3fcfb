#pragma once

#include <gmpxx.h>

#include <string>

namespace gallery {

// Exact arbitrary-precision rational, kept in canonical form
// (positive denominator, gcd(num, den) = 1). GMP maintains the
// canonical form across arithmetic; raw construction goes through
// rational() below, which canonicalizes.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

// Exact decimal expansion truncated-toward-zero to `digits` fractional
// digits, e.g. 1/3 -> "0.3333". Deterministic; used for SVG coordinates.
std::string rational_to_decimal(const Rational& r, int digits);

}  // namespace gallery
