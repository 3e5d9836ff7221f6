#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace linperiod {

// Exact scalar. mpq_class keeps values canonical (den > 0, gcd = 1) as long
// as every construction from a raw num/den pair goes through parse_rational
// or make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "a" or "a/b" with optional leading '-' on a; b must be a nonzero
// decimal. Throws ParseError(0, ...) otherwise.
Rational parse_rational(std::string_view text);

// Comma separated list, e.g. "1,2,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

// "num/den", or "num" when den == 1.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, long exponent);

} // namespace linperiod
