// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polydeg/polynomial.hpp"
#include "polydeg/polytope.hpp"

namespace polydeg {

// Entry k is E_k(t) = sum over k-dimensional faces F of ehr_F(t), so
// E_k(0) = f_k and deg E_k = k with positive leading coefficient.
struct EhrhartVector {
  std::vector<Polynomial> entries;  // index 0..n
};

// I_p(i): total lattice points in the relative interiors of the i-th dilates
// of the p-dimensional faces.
struct InteriorCountTable {
  int max_dilation = 0;
  std::vector<std::vector<Int>> counts;  // counts[p][i-1] = I_p(i)
  const Int& at(int p, int i) const { return counts.at(p).at(i - 1); }
};

// Counting polynomial of the face: ehr_F(i) = |iF intersect Z^n| for all
// integers i >= 0, obtained by counting at i = 0..dim F and interpolating.
Polynomial ehrhart_polynomial(const LatticePolytope& p, const Face& f);

EhrhartVector ehrhart_vector(const LatticePolytope& p);

// (dim F)! times the leading Ehrhart coefficient; always a positive integer
// (with respect to the lattice induced on the face's affine span).
Int normalized_volume(const LatticePolytope& p, const Face& f);

// I_p(i) for all p and 1 <= i <= max_dilation, computed by reciprocity
// I_p(i) = (-1)^p E_p(-i) and cross-checked against direct interior counts;
// a mismatch throws ConsistencyError("reciprocity mismatch").
InteriorCountTable interior_counts(const LatticePolytope& p, int max_dilation);

// n+1 covers every dilation the degree formulas need.
int default_max_dilation(const LatticePolytope& p);

}  // namespace polydeg
