#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>

namespace wronsk {

// Arbitrary-precision integers and rationals.  cpp_rational keeps every value
// in lowest terms with a positive denominator, which is exactly the canonical
// form the rest of the library relies on for equality and rendering.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in canonical form.  Accepts any den != 0 (cpp_rational's own
/// two-argument constructor refuses negative denominators); throws UsageError
/// on den == 0.
Rational make_rational(Integer num, Integer den);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q", q > 0.
std::string to_string(const Rational& value);

/// Inverse of to_string.  Accepts optional leading '-' and "p/q" with q != 0.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Requires is_integer(value); throws InternalError otherwise.
Integer to_integer(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);

/// n! / (parts[0]! * ... * parts[m-1]!).  Requires sum(parts) == n, all >= 0.
Integer multinomial(int n, std::span<const int> parts);

} // namespace wronsk
