// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polydeg/ehrhart.hpp"
#include "polydeg/polytope.hpp"

namespace polydeg {

struct VolumeDegree {
  Int c;                                // alternating sum over all faces
  std::vector<Int> per_dim_volume_sums;  // index p: sum of Vol_Z over p-faces
};

// c(P) = sum_p (-1)^{n-p} (p+1) sum_{F in F_p(P)} Vol_Z(F).  Defined for any
// lattice polytope; its interpretation as a discriminant degree additionally
// needs smoothness, which the report records separately.
VolumeDegree degree_via_volumes(const LatticePolytope& p);

// The interior-point double sum (m = (n+1)/2 for n odd, n/2 for n even):
//   n odd:  sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^{m-i} C(p+1, m+i) 2 i I_p(i)
//   n even: sum_{p=m}^{n} sum_{i=1}^{p+1-m} (-1)^{m+1-i}
//              (C(p+1,m+i) - C(p+1,m+i+1)) i I_p(i)
// evaluated formally for any polytope (no hypothesis check).
Int interior_point_formula_value(const LatticePolytope& p);
Int interior_point_formula_value(const LatticePolytope& p, const InteriorCountTable& table);

// Same value, but enforces the theorem's hypothesis: throws
// HypothesisError("polytope not simple") otherwise.
Int degree_via_interior_points(const LatticePolytope& p);

// True iff iP has no interior lattice points for every 1 <= i <= floor(n/2+1).
// When it fires, c(P) = 0 (verified by analyze_degree).  Requires simple P.
bool defectivity_criterion(const LatticePolytope& p);

struct DegreeReport {
  Int c_volumes;
  // Theorem double sum; equality with c_volumes is claimed (and verified)
  // only when the polytope is simple.
  Int c_interior;
  std::vector<Int> per_dim_volume_sums;
  InteriorCountTable interior_table;
  bool defective_criterion_fires = false;
  bool is_smooth = false;
  bool is_simple = false;
};

// Runs both degree computations plus the defectivity criterion and enforces
// the cross-checks (formula agreement on simple input, c = 0 when the
// criterion fires); violations throw ConsistencyError.
// max_dilation 0 means the default n+1.
DegreeReport analyze_degree(const LatticePolytope& p, int max_dilation = 0);

}  // namespace polydeg
