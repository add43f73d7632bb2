// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polydeg/rational.hpp"

namespace polydeg {

// k-th Bernoulli number with the convention B_1 = -1/2, via the standard
// recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0.  Pure; no cached state.
Rational bernoulli(int k);

// Truncated Laurent series in t, known exactly on a bounded window of orders.
// Coefficients are stored for orders [min_order, valid_max]; orders below
// min_order are exactly zero and orders above valid_max are unknown.  Ring
// operations never consult coefficients above the window and propagate the
// guaranteed-correct bound: a product is correct through
// min(a.valid + b.min, b.valid + a.min).
class LaurentSeries {
 public:
  // coeffs covers orders min_order..valid_max (empty allowed for the series
  // that is zero on the whole window).
  LaurentSeries(int min_order, std::vector<Rational> coeffs, int valid_max);

  static LaurentSeries zero(int valid_max);
  static LaurentSeries monomial(int order, const Rational& c, int valid_max);

  // For a series that is zero on its window this returns valid_max + 1.
  int min_order() const { return min_order_; }
  int valid_max() const { return valid_max_; }

  // Throws ConsistencyError when asked for an order above the window.
  Rational coeff(int order) const;

  // coeff(0); fails loudly if order 0 lies outside the guaranteed window.
  Rational constant_term() const;

  LaurentSeries scaled(const Rational& s) const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  int min_order_ = 1;
  int valid_max_ = 0;
  std::vector<Rational> coeffs_;
  void trim_leading_zeros();
};

// Exact equality of the coefficients both series guarantee.
bool equal_on_common_window(const LaurentSeries& a, const LaurentSeries& b);

// Power series of e^{ct} through t^max_order (max_order >= 0).
LaurentSeries series_exp_linear(const Rational& c, int max_order);

// Laurent expansion of 1/(1 - e^{tx}) = -1/(tx) + 1/2 - tx/12 + ... through
// t^max_order.  Throws for x = 0 ("pole of undetermined order").
LaurentSeries series_recip_one_minus_exp(const Rational& x, int max_order);

}  // namespace polydeg
