// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polydeg/polytope.hpp"

namespace polydeg {

// Named example families with canonical vertex order:
//   cube(n), dilated_simplex(n, d), product_of_simplices(n_1, ..., n_k),
//   segment(d), prism(n) = simplex(1) x simplex(n-1).
// Throws std::invalid_argument for unknown names or nonpositive parameters.
LatticePolytope gen_family(const std::string& family, const std::vector<int>& params);

// Mini-grammar "name:params": cube:3, simplex:2:3 (dim 2 dilated by 3),
// segment:5, prism:3, product:2,3.
LatticePolytope gen_family_spec(const std::string& spec);

// conv{(+-1,+-1,0), (0,0,1)}: the classic non-simple polytope used as the
// negative control (apex lies on four edges).
LatticePolytope square_pyramid();

}  // namespace polydeg
