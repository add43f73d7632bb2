// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polydeg/polytope.hpp"
#include "polydeg/rational.hpp"

namespace polydeg {

// Rational values for the n+1 variables (s, x_1..x_n).  Every x_a must be
// nonzero, since each contributes a pole factor.
struct Specialization {
  Rational s;
  std::vector<Rational> x;

  Specialization(Rational s_value, std::vector<Rational> x_values);
  int n() const { return static_cast<int>(x.size()); }
};

// Constant term of V_p(s,x)(t) = sum_{|J|=p} e^{ts} / prod_{a in J} (-t x_a),
// i.e. (-1)^p s^p/p! times the p-th elementary symmetric value of 1/x_a.
Rational ct_v_p(const Specialization& spec, int p);

// Constant term of B_p(s,x)(t) = sum_{|J|=p} e^{ts} / prod_{a in J}(1 - e^{t x_a}),
// computed per subset with Bernoulli-expanded Laurent factors.
Rational ct_b_p(const Specialization& spec, int p);

struct IdentityReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// Both sides of the constant-term identity
//   LHS = sum_p (-1)^{n-p} (p+1)! CTV_p(s,x)
//   RHS = sum_{p=m}^{n} (-1)^p sum_i <parity weights> CTB_p(-i s, x)
// with the odd weights (-1)^{m-i} C(p+1,m+i) 2i and the even weights
// (-1)^{m+1-i} (C(p+1,m+i) - C(p+1,m+i+1)) i.
IdentityReport verify_symfun_identity(int n, const Specialization& spec);

// Deterministic generic covector: xi = (1, M, M^2, ...) with M = 1 + max
// coordinate spread, incrementing M until no edge direction pairs to zero.
std::vector<Int> generic_covector(const LatticePolytope& p);
std::vector<std::vector<Int>> generic_covectors(const LatticePolytope& p, int count);

// Vertex-cone count: sum over vertices v of CTB_n at s = <v,xi>,
// x_a = <g_a,xi>.  Requires a smooth polytope and generic xi; the per-vertex
// terms are rational but their sum is the lattice point count of P.
Int brion_count(const LatticePolytope& p, const std::vector<Int>& xi);

// n! times the vertex sum of CTV_n; equals Vol_Z(P).
Int brion_volume(const LatticePolytope& p, const std::vector<Int>& xi);

// Vertex-summed version of the constant-term identity, with the dilation
// entering through s -> -i <v,xi> on the B side.  Both sides equal c(P).
IdentityReport verify_polytope_symfun_identity(const LatticePolytope& p, const std::vector<Int>& xi);

}  // namespace polydeg
