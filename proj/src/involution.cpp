// SPDX-License-Identifier: Apache-2.0
#include "polydeg/involution.hpp"

#include <stdexcept>

namespace polydeg {

PolyVector::PolyVector(int n, std::vector<Polynomial> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 0) throw std::invalid_argument("PolyVector requires n >= 0");
  if (static_cast<int>(entries_.size()) != n_ + 1)
    throw std::invalid_argument("PolyVector requires n+1 entries");
  for (int j = 0; j <= n_; ++j)
    if (entries_[static_cast<size_t>(j)].degree() > j)
      throw std::invalid_argument("PolyVector degree bound violated: deg E_" + std::to_string(j) + " > " + std::to_string(j));
}

PolyVector PolyVector::from_scalars(const ScalarVector& values) {
  if (values.empty()) throw std::invalid_argument("PolyVector requires n >= 0");
  std::vector<Polynomial> entries;
  entries.reserve(values.size());
  for (const Rational& v : values) entries.push_back(Polynomial::constant(v));
  return PolyVector(static_cast<int>(values.size()) - 1, std::move(entries));
}

PolyVector s_transform(const PolyVector& e) {
  const int n = e.n();
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    Polynomial acc;
    for (int j = 0; j <= p; ++j)
      acc += Rational(parity_sign(j) * binomial(n - j, n - p)) * e.entry(j);
    out.push_back(std::move(acc));
  }
  return PolyVector(n, std::move(out));
}

ScalarVector s_transform(const ScalarVector& e) {
  if (e.empty()) throw std::invalid_argument("empty vector");
  const int n = static_cast<int>(e.size()) - 1;
  ScalarVector out(e.size());
  for (int p = 0; p <= n; ++p) {
    Rational acc = 0;
    for (int j = 0; j <= p; ++j)
      acc += Rational(parity_sign(j) * binomial(n - j, n - p)) * e[static_cast<size_t>(j)];
    out[static_cast<size_t>(p)] = acc;
  }
  return out;
}

GeneratingIdentityReport check_generating_identity(const PolyVector& e, const Rational& t0) {
  const int n = e.n();
  const PolyVector f = s_transform(e);
  // Powers of (z+1) up to n.
  std::vector<Polynomial> zp1(static_cast<size_t>(n) + 1);
  zp1[0] = Polynomial::constant(Rational(1));
  const Polynomial z_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
  for (int k = 1; k <= n; ++k) zp1[static_cast<size_t>(k)] = zp1[static_cast<size_t>(k - 1)] * z_plus_1;

  GeneratingIdentityReport report;
  for (int p = 0; p <= n; ++p) {
    const Rational ep = e.entry(p)(t0);
    const Rational fp = f.entry(p)(t0);
    report.lhs_z += Polynomial::monomial(p, Rational(parity_sign(p)) * ep) * zp1[static_cast<size_t>(n - p)];
    report.rhs_z += Polynomial::monomial(p, fp);
  }
  report.equal = report.lhs_z == report.rhs_z;
  return report;
}

Rational c_of_vector(const PolyVector& e) {
  const int n = e.n();
  Rational acc = 0;
  for (int p = 0; p <= n; ++p) {
    // (p+1) v_p = (p+1)! [t^p] E_p.
    acc += Rational(parity_sign(n - p)) * Rational(factorial(p + 1)) * e.entry(p).coeff(p);
  }
  return acc;
}

Rational c_via_theorem(const PolyVector& e) {
  const int n = e.n();
  const PolyVector f = s_transform(e);
  const bool odd = (n % 2 != 0);
  const int m = odd ? (n + 1) / 2 : n / 2;
  Rational acc = 0;
  for (int p = m; p <= n; ++p) {
    for (int i = 1; i <= p + 1 - m; ++i) {
      const Rational boundary = e.entry(p)(Rational(-i)) + f.entry(p)(Rational(i));
      if (odd) {
        acc += Rational(parity_sign(p + m - i) * binomial(p + 1, m + i)) * Rational(i) * boundary;
      } else {
        const Int weight = binomial(p + 1, m + i) - binomial(p + 1, m + i + 1);
        acc += Rational(parity_sign(p + 1 + m - i) * weight) * Rational(i, 2) * boundary;
      }
    }
  }
  return acc;
}

}  // namespace polydeg
