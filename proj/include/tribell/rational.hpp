#pragma once

// Exact arithmetic scalars. Everything downstream (matrices, series,
// sequence terms) is built on arbitrary-precision rationals so equality
// checks are exact; there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tribell/error.hpp"

namespace tribell {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical form invariant: denominator > 0, gcd(num, den) = 1. mpq_class
// arithmetic preserves canonical form once established; these helpers
// establish it for values built from raw parts.
Rational rat(long num, long den = 1);
Rational rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" with nonzero q (sign on either part).
Rational parse_rational(std::string_view text);

// "p/q", with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Int& value);

bool is_integer(const Rational& value);

// Requires is_integer(value).
Int to_int(const Rational& value);

// value^exp with exact semantics; exp < 0 requires value != 0. 0^0 = 1.
Rational pow_rational(const Rational& value, long exp);

Int pow_int(const Int& value, unsigned long exp);

Int factorial(unsigned long n);

} // namespace tribell
