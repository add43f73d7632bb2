// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polydeg/polynomial.hpp"

namespace polydeg {

// Constant special case of PolyVector: [E_0, ..., E_n] as plain rationals
// (f-vectors, symmetric-function specializations).
using ScalarVector = std::vector<Rational>;

// Element [E_0, ..., E_n] of the space of polynomial families with
// deg E_j <= j.  The degree bound is validated on construction.
class PolyVector {
 public:
  PolyVector(int n, std::vector<Polynomial> entries);
  static PolyVector from_scalars(const ScalarVector& values);

  int n() const { return n_; }
  const Polynomial& entry(int j) const { return entries_.at(static_cast<size_t>(j)); }
  const std::vector<Polynomial>& entries() const { return entries_; }

  bool operator==(const PolyVector&) const = default;

 private:
  int n_ = 0;
  std::vector<Polynomial> entries_;
};

// The involution F_p = sum_{j=0}^{p} (-1)^j C(n-j, n-p) E_j, applied
// coefficient-wise for polynomial entries.  Applying it twice is the
// identity; it fixes the f-vector of every simple polytope.
PolyVector s_transform(const PolyVector& e);
ScalarVector s_transform(const ScalarVector& e);

// Expands both sides of the generating identity
//   sum_p (-z)^p (z+1)^{n-p} E_p(t0)  ==  sum_p z^p F_p(t0)
// as exact polynomials in z and reports equality with both witnesses.
struct GeneratingIdentityReport {
  bool equal = false;
  Polynomial lhs_z;
  Polynomial rhs_z;
};
GeneratingIdentityReport check_generating_identity(const PolyVector& e, const Rational& t0);

// c(E) = sum_p (-1)^{n-p} (p+1) v_p where E_j = (t^j/j!) v_j + lower terms.
Rational c_of_vector(const PolyVector& e);

// The same functional evaluated through the boundary-value identity: for n
// odd (m = (n+1)/2)
//   c(E) = sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^{p+m-i} C(p+1, m+i) i (E_p(-i) + F_p(i)),
// and for n even (m = n/2) with weights (C(p+1,m+i) - C(p+1,m+i+1)) (i/2)
// and sign (-1)^{p+1+m-i}.  n = 0 extends the even formula verbatim.
Rational c_via_theorem(const PolyVector& e);

}  // namespace polydeg
