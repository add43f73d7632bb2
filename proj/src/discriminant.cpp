// SPDX-License-Identifier: Apache-2.0
#include "polydeg/discriminant.hpp"

#include <algorithm>

namespace polydeg {

VolumeDegree degree_via_volumes(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  VolumeDegree result;
  result.c = 0;
  result.per_dim_volume_sums.assign(static_cast<size_t>(n) + 1, Int(0));
  for (int dim = 0; dim <= n; ++dim) {
    Int sum = 0;
    for (const Face& f : p.face_lattice().faces_by_dim[static_cast<size_t>(dim)]) sum += normalized_volume(p, f);
    result.per_dim_volume_sums[static_cast<size_t>(dim)] = sum;
    result.c += parity_sign(n - dim) * Int(dim + 1) * sum;
  }
  return result;
}

Int interior_point_formula_value(const LatticePolytope& p, const InteriorCountTable& table) {
  const int n = p.ambient_dim();
  const bool odd = (n % 2 != 0);
  const int m = odd ? (n + 1) / 2 : n / 2;
  Int acc = 0;
  for (int dim = m; dim <= n; ++dim) {
    for (int i = 1; i <= dim + 1 - m; ++i) {
      const Int& interior = table.at(dim, i);
      if (odd) {
        acc += parity_sign(m - i) * binomial(dim + 1, m + i) * Int(2 * i) * interior;
      } else {
        const Int weight = binomial(dim + 1, m + i) - binomial(dim + 1, m + i + 1);
        acc += parity_sign(m + 1 - i) * weight * Int(i) * interior;
      }
    }
  }
  return acc;
}

Int interior_point_formula_value(const LatticePolytope& p) {
  return interior_point_formula_value(p, interior_counts(p, default_max_dilation(p)));
}

Int degree_via_interior_points(const LatticePolytope& p) {
  if (!is_simple(p)) throw HypothesisError("polytope not simple");
  return interior_point_formula_value(p);
}

bool defectivity_criterion(const LatticePolytope& p) {
  if (!is_simple(p)) throw HypothesisError("polytope not simple");
  const int n = p.ambient_dim();
  const int bound = (n + 2) / 2;  // floor(n/2 + 1)
  for (int i = 1; i <= bound; ++i)
    if (count_interior_points(p, p.whole_face(), i) != 0) return false;
  return true;
}

DegreeReport analyze_degree(const LatticePolytope& p, int max_dilation) {
  const int needed = default_max_dilation(p);
  if (max_dilation < needed) max_dilation = needed;

  DegreeReport report;
  report.is_simple = is_simple(p);
  report.is_smooth = is_smooth(p);

  VolumeDegree vd = degree_via_volumes(p);
  report.c_volumes = vd.c;
  report.per_dim_volume_sums = std::move(vd.per_dim_volume_sums);

  report.interior_table = interior_counts(p, max_dilation);
  report.c_interior = interior_point_formula_value(p, report.interior_table);

  if (report.is_simple) {
    if (report.c_volumes != report.c_interior)
      throw ConsistencyError("degree formula cross-check failed: volumes " + to_string(report.c_volumes) +
                             " vs interior points " + to_string(report.c_interior));
    report.defective_criterion_fires = defectivity_criterion(p);
    if (report.defective_criterion_fires && report.c_volumes != 0)
      throw ConsistencyError("defectivity criterion fired but c(P) = " + to_string(report.c_volumes));
  }
  return report;
}

}  // namespace polydeg
