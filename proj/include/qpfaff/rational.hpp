#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace qpfaff {

// The only numeric type in the engine. GMP-backed, always held in lowest
// terms with a positive denominator; arithmetic never rounds.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
// (The raw mpq_rational(int, int) constructor mishandles negative
// denominators, so all two-part construction must go through here.)
Rational make_rational(const Integer& num, const Integer& den);

// Exact integer power; exp may be negative. Throws std::domain_error on 0^neg.
Rational pow_int(const Rational& base, long exp);

// Parses "p", "-p", "p/q" (optionally signed, q > 0 after normalization).
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace qpfaff
