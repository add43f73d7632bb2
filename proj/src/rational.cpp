// SPDX-License-Identifier: Apache-2.0
#include "polydeg/rational.hpp"

#include <stdexcept>

namespace polydeg {

Int factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Int binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;  // exact: r is C(a-b+i, i) after this step
  }
  return r;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Int to_integer(const Rational& q) {
  if (!is_integral(q)) throw ConsistencyError("expected an integer, got " + to_string(q));
  return numerator(q);
}

Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_rational: negative exponent");
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& q) { return q.str(); }

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw ParseError("invalid integer literal: \"" + s + "\"");
  }
}

Rational rational_from_string(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw ParseError("invalid rational literal: \"" + s + "\"");
  }
}

}  // namespace polydeg
