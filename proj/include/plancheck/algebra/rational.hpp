#pragma once

// Arbitrary-precision integers and rationals.
//
// GMP's mpq_class keeps every value reduced with a positive denominator, which
// is exactly the invariant the rest of the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace plancheck {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

/// Integer power with a signed exponent; the base must be nonzero when exp < 0.
Rational pow(const Rational& base, long exp);
Integer ipow(const Integer& base, unsigned long exp);

double to_double(const Rational& r);

/// Exact square root of a nonnegative rational, or false if it is irrational.
bool exact_sqrt(const Rational& r, Rational& root);

}  // namespace plancheck
