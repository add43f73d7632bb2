// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydeg/rational.hpp"

namespace polydeg {

// Dense univariate polynomial with exact rational coefficients.  Index k of
// the coefficient vector holds the coefficient of t^k; trailing zeros are
// trimmed and the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int deg, const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  // p(-t): negates every odd-degree coefficient.
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Unique polynomial of degree < |points| through all (argument, value) pairs,
// exact.  Throws on an empty list or duplicate arguments.
Polynomial lagrange_interpolate(const std::vector<std::pair<Int, Rational>>& points);

}  // namespace polydeg
