// SPDX-License-Identifier: Apache-2.0
#include "polydeg/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "polydeg/combinations.hpp"

namespace polydeg {

namespace {

Int dot(const Point& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Fraction-free Bareiss; exact for any size, used only for n <= 6 here.
Int int_determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(r)]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] == 0) continue;
      Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(c)] / m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      for (int j = c; j < cols; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    ++r;
  }
  return r;
}

int affine_rank(const std::vector<Point>& pts, const std::vector<int>& subset) {
  if (subset.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  const Point& base = pts[static_cast<size_t>(subset[0])];
  for (size_t i = 1; i < subset.size(); ++i) {
    std::vector<Rational> row(base.size());
    const Point& q = pts[static_cast<size_t>(subset[i])];
    for (size_t d = 0; d < base.size(); ++d) row[d] = Rational(q[d] - base[d]);
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

int affine_rank_all(const std::vector<Point>& pts) {
  std::vector<int> all(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  return affine_rank(pts, all);
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (Int& c : v) c /= g;
}

// Primitive normal of the hyperplane spanned by the n chosen points
// (generalized cross product of the difference vectors); nullopt when the
// points are affinely dependent.
std::optional<std::vector<Int>> hyperplane_normal(const std::vector<Point>& pts, const std::vector<int>& idx, int n) {
  if (n == 1) return std::vector<Int>{1};
  std::vector<std::vector<Int>> diff(static_cast<size_t>(n - 1), std::vector<Int>(static_cast<size_t>(n)));
  const Point& base = pts[static_cast<size_t>(idx[0])];
  for (int i = 1; i < n; ++i)
    for (int d = 0; d < n; ++d)
      diff[static_cast<size_t>(i - 1)][static_cast<size_t>(d)] = pts[static_cast<size_t>(idx[i])][static_cast<size_t>(d)] - base[static_cast<size_t>(d)];
  std::vector<Int> normal(static_cast<size_t>(n));
  bool nonzero = false;
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor(static_cast<size_t>(n - 1), std::vector<Int>(static_cast<size_t>(n - 1)));
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[static_cast<size_t>(r)][static_cast<size_t>(cc++)] = diff[static_cast<size_t>(r)][static_cast<size_t>(c)];
      }
    }
    Int mj = int_determinant(std::move(minor));
    normal[static_cast<size_t>(j)] = (j % 2 == 0) ? mj : Int(-mj);
    if (normal[static_cast<size_t>(j)] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  make_primitive(normal);
  return normal;
}

// Brute force over affinely independent n-subsets, deduplicated by the
// normalized inequality.  Complete and irredundant: every facet contains n
// affinely independent vertices, and every recorded inequality is supporting
// with an (n-1)-dimensional tight set.
std::vector<FacetInequality> enumerate_facets(const std::vector<Point>& pts, int n) {
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for_each_combination(static_cast<int>(pts.size()), n, [&](const std::vector<int>& idx) {
    auto normal = hyperplane_normal(pts, idx, n);
    if (!normal) return;
    Int offset = dot(pts[static_cast<size_t>(idx[0])], *normal);
    bool above = false, below = false;
    for (const Point& q : pts) {
      Int d = dot(q, *normal) - offset;
      if (d > 0) above = true;
      if (d < 0) below = true;
      if (above && below) return;  // not supporting
    }
    if (above) {
      for (Int& c : *normal) c = -c;
      offset = -offset;
    }
    seen.insert({std::move(*normal), std::move(offset)});
  });
  std::vector<FacetInequality> out;
  out.reserve(seen.size());
  for (const auto& [normal, offset] : seen) out.push_back({normal, offset});
  return out;
}

FaceLattice build_face_lattice(const std::vector<Point>& verts, const std::vector<FacetInequality>& facets, int n) {
  const int nv = static_cast<int>(verts.size());
  std::vector<std::vector<int>> tight_sets(facets.size());
  for (size_t fi = 0; fi < facets.size(); ++fi)
    for (int v = 0; v < nv; ++v)
      if (dot(verts[static_cast<size_t>(v)], facets[fi].normal) == facets[fi].offset) tight_sets[fi].push_back(v);

  // Faces are exactly the nonempty intersections of facet tight sets,
  // together with P itself; close under single-facet intersection.
  std::vector<int> full(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) full[static_cast<size_t>(v)] = v;
  std::set<std::vector<int>> known{full};
  std::vector<std::vector<int>> work{full};
  while (!work.empty()) {
    std::vector<int> s = std::move(work.back());
    work.pop_back();
    for (const auto& tight : tight_sets) {
      std::vector<int> inter;
      std::set_intersection(s.begin(), s.end(), tight.begin(), tight.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      if (known.insert(inter).second) work.push_back(std::move(inter));
    }
  }

  FaceLattice lattice;
  lattice.faces_by_dim.assign(static_cast<size_t>(n) + 1, {});
  for (const auto& s : known) {
    Face face;
    face.vertex_indices = s;
    face.dim = affine_rank(verts, s);
    for (size_t fi = 0; fi < facets.size(); ++fi)
      if (std::includes(tight_sets[fi].begin(), tight_sets[fi].end(), s.begin(), s.end()))
        face.tight_facets.push_back(static_cast<int>(fi));
    lattice.faces_by_dim.at(static_cast<size_t>(face.dim)).push_back(std::move(face));
  }
  for (auto& faces : lattice.faces_by_dim)
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.vertex_indices < b.vertex_indices; });
  for (int p = 0; p <= n; ++p) lattice.f_vector.push_back(Int(lattice.faces_by_dim[static_cast<size_t>(p)].size()));
  if (lattice.f_vector.back() != 1) throw ConsistencyError("face lattice lost the full face");
  return lattice;
}

std::vector<const Face*> edges_at_vertex(const LatticePolytope& p, int vertex_index) {
  std::vector<const Face*> edges;
  if (p.ambient_dim() < 1) return edges;
  for (const Face& e : p.face_lattice().faces_by_dim[1])
    if (std::binary_search(e.vertex_indices.begin(), e.vertex_indices.end(), vertex_index)) edges.push_back(&e);
  return edges;
}

}  // namespace

LatticePolytope build_polytope(std::vector<Point> points, std::string name) {
  if (points.empty()) throw std::invalid_argument("empty input");
  const int n = static_cast<int>(points[0].size());
  if (n == 0) throw std::invalid_argument("ambient dimension must be positive");
  for (const Point& q : points)
    if (static_cast<int>(q.size()) != n) throw std::invalid_argument("inconsistent coordinate dimension");

  std::vector<Point> uniq;
  {
    std::set<Point> seen;
    for (Point& q : points)
      if (seen.insert(q).second) uniq.push_back(std::move(q));
  }
  if (affine_rank_all(uniq) < n) throw std::invalid_argument("not full-dimensional");

  std::vector<FacetInequality> facets = enumerate_facets(uniq, n);

  // A listed point is a vertex of the hull iff its tight facet normals span.
  std::vector<Point> verts;
  for (const Point& q : uniq) {
    std::vector<std::vector<Rational>> tight_normals;
    for (const FacetInequality& f : facets)
      if (dot(q, f.normal) == f.offset) {
        std::vector<Rational> row(f.normal.size());
        for (size_t d = 0; d < f.normal.size(); ++d) row[d] = Rational(f.normal[d]);
        tight_normals.push_back(std::move(row));
      }
    if (matrix_rank(std::move(tight_normals)) == n) verts.push_back(q);
  }

  LatticePolytope poly;
  poly.dim_ = n;
  poly.name_ = std::move(name);
  poly.vertices_ = std::move(verts);
  poly.facets_ = std::move(facets);
  poly.lattice_ = build_face_lattice(poly.vertices_, poly.facets_, n);
  return poly;
}

bool is_simple(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    if (static_cast<int>(edges_at_vertex(p, v).size()) != n) return false;
  return true;
}

std::vector<Point> vertex_cone_generators(const LatticePolytope& p, int vertex_index) {
  const int n = p.ambient_dim();
  if (vertex_index < 0 || vertex_index >= static_cast<int>(p.vertices().size()))
    throw std::invalid_argument("vertex index out of range");
  auto edges = edges_at_vertex(p, vertex_index);
  if (static_cast<int>(edges.size()) != n) throw HypothesisError("vertex not simple");
  std::vector<Point> gens;
  const Point& v = p.vertices()[static_cast<size_t>(vertex_index)];
  for (const Face* e : edges) {
    int other = e->vertex_indices[0] == vertex_index ? e->vertex_indices[1] : e->vertex_indices[0];
    Point dir(static_cast<size_t>(n));
    const Point& w = p.vertices()[static_cast<size_t>(other)];
    for (int d = 0; d < n; ++d) dir[static_cast<size_t>(d)] = w[static_cast<size_t>(d)] - v[static_cast<size_t>(d)];
    make_primitive(dir);
    gens.push_back(std::move(dir));
  }
  return gens;
}

bool is_smooth(const LatticePolytope& p) {
  if (!is_simple(p)) return false;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    std::vector<std::vector<Int>> m = vertex_cone_generators(p, v);
    Int det = int_determinant(std::move(m));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

namespace {

Int count_points_impl(const LatticePolytope& p, const Face& f, int dilation, bool interior) {
  if (dilation < 1) throw std::invalid_argument("dilation must be positive");
  const int n = p.ambient_dim();
  const auto& verts = p.vertices();
  const auto& facets = p.facets();

  std::vector<Int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) {
    Int mn = verts[static_cast<size_t>(f.vertex_indices[0])][static_cast<size_t>(d)];
    Int mx = mn;
    for (int vi : f.vertex_indices) {
      const Int& c = verts[static_cast<size_t>(vi)][static_cast<size_t>(d)];
      if (c < mn) mn = c;
      if (c > mx) mx = c;
    }
    lo[static_cast<size_t>(d)] = mn * dilation;
    hi[static_cast<size_t>(d)] = mx * dilation;
  }

  const int nf = static_cast<int>(facets.size());
  std::vector<Int> rhs(static_cast<size_t>(nf));
  std::vector<bool> tight(static_cast<size_t>(nf), false);
  std::vector<std::vector<int>> finalized_at(static_cast<size_t>(n));
  for (int fi = 0; fi < nf; ++fi) {
    rhs[static_cast<size_t>(fi)] = facets[static_cast<size_t>(fi)].offset * dilation;
    tight[static_cast<size_t>(fi)] =
        std::binary_search(f.tight_facets.begin(), f.tight_facets.end(), fi);
    int last_nz = -1;
    for (int d = 0; d < n; ++d)
      if (facets[static_cast<size_t>(fi)].normal[static_cast<size_t>(d)] != 0) last_nz = d;
    finalized_at[static_cast<size_t>(last_nz)].push_back(fi);
  }

  // Row-major scan of the box with early pruning: a facet constraint is
  // checked as soon as the coordinates it involves are all fixed.
  std::vector<std::vector<Int>> partial(static_cast<size_t>(n) + 1, std::vector<Int>(static_cast<size_t>(nf), Int(0)));
  Int count = 0;
  std::function<void(int)> rec = [&](int depth) {
    for (Int x = lo[static_cast<size_t>(depth)]; x <= hi[static_cast<size_t>(depth)]; ++x) {
      for (int fi = 0; fi < nf; ++fi)
        partial[static_cast<size_t>(depth) + 1][static_cast<size_t>(fi)] =
            partial[static_cast<size_t>(depth)][static_cast<size_t>(fi)] +
            facets[static_cast<size_t>(fi)].normal[static_cast<size_t>(depth)] * x;
      bool ok = true;
      for (int fi : finalized_at[static_cast<size_t>(depth)]) {
        const Int& val = partial[static_cast<size_t>(depth) + 1][static_cast<size_t>(fi)];
        const Int& bound = rhs[static_cast<size_t>(fi)];
        if (tight[static_cast<size_t>(fi)] ? (val != bound) : (interior ? !(val < bound) : !(val <= bound))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (depth + 1 == n)
        ++count;
      else
        rec(depth + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

Int count_lattice_points(const LatticePolytope& p, const Face& f, int dilation) {
  return count_points_impl(p, f, dilation, false);
}

Int count_interior_points(const LatticePolytope& p, const Face& f, int dilation) {
  return count_points_impl(p, f, dilation, true);
}

Int max_scan_points(const LatticePolytope& p, int max_dilation) {
  Int total = 1;
  for (int d = 0; d < p.ambient_dim(); ++d) {
    Int mn = p.vertices()[0][static_cast<size_t>(d)];
    Int mx = mn;
    for (const Point& v : p.vertices()) {
      if (v[static_cast<size_t>(d)] < mn) mn = v[static_cast<size_t>(d)];
      if (v[static_cast<size_t>(d)] > mx) mx = v[static_cast<size_t>(d)];
    }
    total *= (mx - mn) * max_dilation + 1;
  }
  return total;
}

}  // namespace polydeg
