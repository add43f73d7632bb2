// SPDX-License-Identifier: Apache-2.0
#include "polydeg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polydeg {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(int deg, const Rational& c) {
  if (deg < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> v = coeffs_;
  for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return Rational(-1) * (*this); }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || ac != 1) out << polydeg::to_string(ac);
    if (k > 0) {
      if (ac != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Polynomial lagrange_interpolate(const std::vector<std::pair<Int, Rational>>& points) {
  if (points.empty()) throw std::invalid_argument("empty interpolation input");
  std::set<Int> seen;
  for (const auto& [arg, value] : points) {
    (void)value;
    if (!seen.insert(arg).second) throw std::invalid_argument("duplicate interpolation node");
  }
  Polynomial result;
  for (size_t i = 0; i < points.size(); ++i) {
    Polynomial basis = Polynomial::constant(Rational(1));
    Rational denom = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
      denom *= Rational(points[i].first - points[j].first);
    }
    result += (points[i].second / denom) * basis;
  }
  return result;
}

}  // namespace polydeg
