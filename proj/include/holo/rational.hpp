#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holo {

using Integer = mpz_class;
/// GMP rationals are kept canonical (reduced, positive denominator) by every
/// arithmetic operation; values built from raw parts must go through
/// make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1. Base 10, no whitespace.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", optional leading sign, surrounding whitespace ignored.
/// Throws Error{ParseError} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Rising factorial (a)_n.
Rational rising_factorial(const Rational& a, long n);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace holo
