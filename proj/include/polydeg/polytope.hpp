// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polydeg/rational.hpp"

namespace polydeg {

using Point = std::vector<Int>;

// Supporting halfspace normal . x <= offset with a primitive integer normal;
// the tight vertex set spans an (n-1)-dimensional affine space.
struct FacetInequality {
  std::vector<Int> normal;
  Int offset;
  bool operator==(const FacetInequality&) const = default;
};

// A nonempty face, identified by the vertices of P lying on it and the facets
// containing it.  The face equals the intersection of P with its tight
// facets; the face of dimension n is P itself with no tight facets.
struct Face {
  int dim = 0;
  std::vector<int> vertex_indices;  // sorted indices into the vertex list
  std::vector<int> tight_facets;    // sorted indices into the facet list
};

struct FaceLattice {
  std::vector<std::vector<Face>> faces_by_dim;  // index p = 0..n
  std::vector<Int> f_vector;                    // f_p = |faces_by_dim[p]|, f_n = 1
};

// Full-dimensional lattice polytope, immutable after construction.  Facets
// and the face lattice are computed eagerly by build_polytope, so all
// accessors are cheap and the object is safe to share between threads.
class LatticePolytope {
 public:
  int ambient_dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::string& name() const { return name_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  const FaceLattice& face_lattice() const { return lattice_; }

  // The unique face of dimension n (the polytope itself).
  const Face& whole_face() const { return lattice_.faces_by_dim[dim_].front(); }

 private:
  friend LatticePolytope build_polytope(std::vector<Point> points, std::string name);
  int dim_ = 0;
  std::string name_;
  std::vector<Point> vertices_;
  std::vector<FacetInequality> facets_;
  FaceLattice lattice_;
};

// Validates and canonicalizes: rejects empty or non-full-dimensional input,
// drops duplicate points and points that are not vertices of the hull.
LatticePolytope build_polytope(std::vector<Point> points, std::string name = "");

// Every vertex lies on exactly n edges.
bool is_simple(const LatticePolytope& p);

// Simple, and the primitive edge directions at each vertex have determinant
// +-1 (i.e. form a lattice basis).
bool is_smooth(const LatticePolytope& p);

// Primitive direction vectors of the n edges emanating from a vertex.
// Throws HypothesisError("vertex not simple") if the edge count is not n.
std::vector<Point> vertex_cone_generators(const LatticePolytope& p, int vertex_index);

// |dilation*F  intersect  Z^n| by exhaustive scan of the bounding box, with
// membership tested against P's facet inequalities (equality on tight
// facets).  dilation >= 1.
Int count_lattice_points(const LatticePolytope& p, const Face& f, int dilation);

// Lattice points in the relative interior of dilation*F: strict inequality
// on every facet not containing F, equality on the tight ones.
Int count_interior_points(const LatticePolytope& p, const Face& f, int dilation);

// Upper bound on the number of box points a full scan at the given dilation
// may visit; used by the CLI resource guard.
Int max_scan_points(const LatticePolytope& p, int max_dilation);

}  // namespace polydeg
