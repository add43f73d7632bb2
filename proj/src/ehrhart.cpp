// SPDX-License-Identifier: Apache-2.0
#include "polydeg/ehrhart.hpp"

#include <stdexcept>

namespace polydeg {

Polynomial ehrhart_polynomial(const LatticePolytope& p, const Face& f) {
  // Counting at t = 0..dim F pins the polynomial of degree dim F; 0F is the
  // origin, so ehr_F(0) = 1 without a scan.
  std::vector<std::pair<Int, Rational>> nodes;
  nodes.push_back({Int(0), Rational(1)});
  for (int i = 1; i <= f.dim; ++i) nodes.push_back({Int(i), Rational(count_lattice_points(p, f, i))});
  return lagrange_interpolate(nodes);
}

EhrhartVector ehrhart_vector(const LatticePolytope& p) {
  EhrhartVector e;
  for (const auto& faces : p.face_lattice().faces_by_dim) {
    Polynomial sum;
    for (const Face& f : faces) sum += ehrhart_polynomial(p, f);
    e.entries.push_back(std::move(sum));
  }
  return e;
}

Int normalized_volume(const LatticePolytope& p, const Face& f) {
  Polynomial ehr = ehrhart_polynomial(p, f);
  if (ehr.degree() != f.dim) throw ConsistencyError("Ehrhart degree does not match face dimension");
  Rational vol = Rational(factorial(f.dim)) * ehr.coeff(f.dim);
  if (!is_integral(vol) || vol <= 0) throw ConsistencyError("normalized volume is not a positive integer");
  return to_integer(vol);
}

InteriorCountTable interior_counts(const LatticePolytope& p, int max_dilation) {
  if (max_dilation < 1) throw std::invalid_argument("max_dilation must be positive");
  const int n = p.ambient_dim();
  EhrhartVector e = ehrhart_vector(p);
  InteriorCountTable table;
  table.max_dilation = max_dilation;
  table.counts.assign(static_cast<size_t>(n) + 1, {});
  for (int dim = 0; dim <= n; ++dim) {
    for (int i = 1; i <= max_dilation; ++i) {
      // Reciprocity route: I_p(i) = (-1)^p E_p(-i).
      Rational via_reciprocity = Rational(parity_sign(dim)) * e.entries[static_cast<size_t>(dim)](Rational(-i));
      Int direct = 0;
      for (const Face& f : p.face_lattice().faces_by_dim[static_cast<size_t>(dim)])
        direct += count_interior_points(p, f, i);
      if (!is_integral(via_reciprocity) || to_integer(via_reciprocity) != direct)
        throw ConsistencyError("reciprocity mismatch");
      table.counts[static_cast<size_t>(dim)].push_back(direct);
    }
  }
  return table;
}

int default_max_dilation(const LatticePolytope& p) { return p.ambient_dim() + 1; }

}  // namespace polydeg
