// SPDX-License-Identifier: Apache-2.0
#include "polydeg/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace polydeg {

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j, giving B_1 = -1/2.
  std::vector<Rational> table(static_cast<size_t>(k) + 1);
  table[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[static_cast<size_t>(j)];
    table[static_cast<size_t>(m)] = -acc / Rational(m + 1);
  }
  return table[static_cast<size_t>(k)];
}

LaurentSeries::LaurentSeries(int min_order, std::vector<Rational> coeffs, int valid_max)
    : min_order_(min_order), valid_max_(valid_max), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    min_order_ = valid_max_ + 1;
  } else if (static_cast<int>(coeffs_.size()) != valid_max_ - min_order_ + 1) {
    throw std::invalid_argument("LaurentSeries: coefficient count does not match window");
  }
  trim_leading_zeros();
}

void LaurentSeries::trim_leading_zeros() {
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
    min_order_ += static_cast<int>(drop);
  }
  if (coeffs_.empty()) min_order_ = valid_max_ + 1;
}

LaurentSeries LaurentSeries::zero(int valid_max) { return LaurentSeries(valid_max + 1, {}, valid_max); }

LaurentSeries LaurentSeries::monomial(int order, const Rational& c, int valid_max) {
  if (order > valid_max) throw std::invalid_argument("monomial order above window");
  std::vector<Rational> v(static_cast<size_t>(valid_max - order) + 1, Rational(0));
  v.front() = c;
  return LaurentSeries(order, std::move(v), valid_max);
}

Rational LaurentSeries::coeff(int order) const {
  if (order > valid_max_) throw ConsistencyError("coefficient outside guaranteed window");
  if (order < min_order_) return Rational(0);
  return coeffs_[static_cast<size_t>(order - min_order_)];
}

Rational LaurentSeries::constant_term() const {
  if (valid_max_ < 0) throw ConsistencyError("constant term outside guaranteed window");
  return coeff(0);
}

LaurentSeries LaurentSeries::scaled(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return LaurentSeries(min_order_, std::move(v), valid_max_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int valid = std::min(a.valid_max_, b.valid_max_);
  const int mo = std::min(a.min_order_, b.min_order_);
  if (mo > valid) return LaurentSeries::zero(valid);
  std::vector<Rational> v(static_cast<size_t>(valid - mo) + 1, Rational(0));
  for (int k = mo; k <= valid; ++k) {
    Rational s = 0;
    if (k >= a.min_order_ && k <= a.valid_max_) s += a.coeffs_[static_cast<size_t>(k - a.min_order_)];
    if (k >= b.min_order_ && k <= b.valid_max_) s += b.coeffs_[static_cast<size_t>(k - b.min_order_)];
    v[static_cast<size_t>(k - mo)] = s;
  }
  return LaurentSeries(mo, std::move(v), valid);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Correct through min(a.valid + b.min, b.valid + a.min): any unknown
  // coefficient of one factor only influences orders above that bound.
  const int valid = std::min(a.valid_max_ + b.min_order_, b.valid_max_ + a.min_order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries::zero(valid);
  const int mo = a.min_order_ + b.min_order_;
  if (mo > valid) return LaurentSeries::zero(valid);
  std::vector<Rational> v(static_cast<size_t>(valid - mo) + 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int k = a.min_order_ + static_cast<int>(i) + b.min_order_ + static_cast<int>(j);
      if (k > valid) break;
      v[static_cast<size_t>(k - mo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(mo, std::move(v), valid);
}

bool equal_on_common_window(const LaurentSeries& a, const LaurentSeries& b) {
  const int hi = std::min(a.valid_max(), b.valid_max());
  const int lo = std::min(a.min_order(), b.min_order());
  for (int k = lo; k <= hi; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

LaurentSeries series_exp_linear(const Rational& c, int max_order) {
  if (max_order < 0) throw std::invalid_argument("series_exp_linear: max_order must be >= 0");
  std::vector<Rational> v(static_cast<size_t>(max_order) + 1);
  Rational term = 1;
  v[0] = term;
  for (int k = 1; k <= max_order; ++k) {
    term = term * c / Rational(k);
    v[static_cast<size_t>(k)] = term;
  }
  return LaurentSeries(0, std::move(v), max_order);
}

LaurentSeries series_recip_one_minus_exp(const Rational& x, int max_order) {
  if (x == 0) throw std::invalid_argument("pole of undetermined order");
  if (max_order < -1) throw std::invalid_argument("series_recip_one_minus_exp: window must include order -1");
  // 1/(1 - e^{tx}) = -(1/(tx)) sum_k B_k (tx)^k / k!; the t^{k-1} coefficient
  // is -B_k x^{k-1} / k!.
  std::vector<Rational> v(static_cast<size_t>(max_order + 1) + 1);
  Rational xpow = Rational(1) / x;  // x^{k-1}, starting at k = 0
  Rational kfact = 1;
  for (int k = 0; k <= max_order + 1; ++k) {
    if (k > 0) {
      kfact *= k;
      xpow *= x;
    }
    v[static_cast<size_t>(k)] = -bernoulli(k) * xpow / kfact;
  }
  return LaurentSeries(-1, std::move(v), max_order);
}

}  // namespace polydeg
