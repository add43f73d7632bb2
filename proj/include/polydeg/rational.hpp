// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "polydeg/errors.hpp"

namespace polydeg {

// Exact arbitrary-precision arithmetic.  Rational is always stored in lowest
// terms with a positive denominator; there is no floating point anywhere in
// the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int k);

// Binomial coefficient, 0 whenever b < 0 or b > a.  Out-of-range indices are
// relied on to make alternating double sums total without special cases.
Int binomial(int a, int b);

bool is_integral(const Rational& q);

// Exact conversion; throws ConsistencyError if q has a nontrivial denominator.
Int to_integer(const Rational& q);

Rational pow_rational(const Rational& base, int exp);  // exp >= 0

inline int parity_sign(long long k) { return (k % 2 != 0) ? -1 : 1; }

std::string to_string(const Int& v);
std::string to_string(const Rational& q);

Int int_from_string(const std::string& s);       // throws ParseError
Rational rational_from_string(const std::string& s);  // throws ParseError

}  // namespace polydeg
