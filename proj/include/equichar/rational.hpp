#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace equichar {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& q);

// Throws std::domain_error if q is not an integer.
Integer as_integer(const Rational& q);

// Accepts "a" or "a/b" with optional sign and surrounding whitespace.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

long mod_positive(long a, long m);

// Inverse of a modulo m; requires gcd(a, m) = 1.
long mod_inverse(long a, long m);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace equichar
