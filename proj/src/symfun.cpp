// SPDX-License-Identifier: Apache-2.0
#include "polydeg/symfun.hpp"

#include <sstream>
#include <stdexcept>

#include "polydeg/combinations.hpp"
#include "polydeg/laurent.hpp"

namespace polydeg {

namespace {

// Truncation policy: every constant-term computation in this module runs
// with max_order = n + 2, so products with up to n pole factors keep order 0
// inside the guaranteed window with slack.
int window(int n) { return n + 2; }

Int pairing(const Point& v, const std::vector<Int>& xi) {
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * xi[i];
  return s;
}

std::string format_vector(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

Specialization vertex_specialization(const LatticePolytope& p, int vertex_index, const std::vector<Int>& xi) {
  const Point& v = p.vertices()[static_cast<size_t>(vertex_index)];
  std::vector<Point> gens = vertex_cone_generators(p, vertex_index);
  std::vector<Rational> x;
  x.reserve(gens.size());
  for (const Point& g : gens) {
    Int value = pairing(g, xi);
    if (value == 0)
      throw HypothesisError("xi not generic: edge generator " + format_vector(g) + " pairs to zero with " +
                            format_vector(xi));
    x.push_back(Rational(value));
  }
  return Specialization(Rational(pairing(v, xi)), std::move(x));
}

Rational theorem_lhs(const Specialization& spec) {
  const int n = spec.n();
  Rational acc = 0;
  for (int p = 0; p <= n; ++p)
    acc += Rational(parity_sign(n - p) * factorial(p + 1)) * ct_v_p(spec, p);
  return acc;
}

Rational theorem_rhs(const Specialization& spec) {
  const int n = spec.n();
  const bool odd = (n % 2 != 0);
  const int m = odd ? (n + 1) / 2 : n / 2;
  Rational acc = 0;
  for (int p = m; p <= n; ++p) {
    for (int i = 1; i <= p + 1 - m; ++i) {
      const Specialization dilated(Rational(-i) * spec.s, spec.x);
      const Rational ctb = ct_b_p(dilated, p);
      if (odd) {
        acc += Rational(parity_sign(p) * parity_sign(m - i) * binomial(p + 1, m + i)) * Rational(2 * i) * ctb;
      } else {
        const Int weight = binomial(p + 1, m + i) - binomial(p + 1, m + i + 1);
        acc += Rational(parity_sign(p) * parity_sign(m + 1 - i) * weight) * Rational(i) * ctb;
      }
    }
  }
  return acc;
}

}  // namespace

Specialization::Specialization(Rational s_value, std::vector<Rational> x_values)
    : s(std::move(s_value)), x(std::move(x_values)) {
  for (const Rational& xa : x)
    if (xa == 0) throw std::invalid_argument("specialization requires nonzero x entries");
}

Rational ct_v_p(const Specialization& spec, int p) {
  const int n = spec.n();
  if (p < 0 || p > n) throw std::invalid_argument("subset size out of range");
  const int max_order = window(n);
  const LaurentSeries exp = series_exp_linear(spec.s, max_order);
  Rational acc = 0;
  for_each_combination(n, p, [&](const std::vector<int>& subset) {
    LaurentSeries term = exp;
    for (int a : subset)
      term = term * LaurentSeries::monomial(-1, Rational(-1) / spec.x[static_cast<size_t>(a)], max_order);
    acc += term.constant_term();
  });
  return acc;
}

Rational ct_b_p(const Specialization& spec, int p) {
  const int n = spec.n();
  if (p < 0 || p > n) throw std::invalid_argument("subset size out of range");
  const int max_order = window(n);
  const LaurentSeries exp = series_exp_linear(spec.s, max_order);
  std::vector<LaurentSeries> recip;
  recip.reserve(spec.x.size());
  for (const Rational& xa : spec.x) recip.push_back(series_recip_one_minus_exp(xa, max_order));
  Rational acc = 0;
  for_each_combination(n, p, [&](const std::vector<int>& subset) {
    LaurentSeries term = exp;
    for (int a : subset) term = term * recip[static_cast<size_t>(a)];
    acc += term.constant_term();
  });
  return acc;
}

IdentityReport verify_symfun_identity(int n, const Specialization& spec) {
  if (spec.n() != n) throw std::invalid_argument("specialization arity does not match n");
  IdentityReport report;
  report.lhs = theorem_lhs(spec);
  report.rhs = theorem_rhs(spec);
  report.equal = report.lhs == report.rhs;
  return report;
}

std::vector<std::vector<Int>> generic_covectors(const LatticePolytope& p, int count) {
  const int n = p.ambient_dim();
  // Edge directions determine genericity; collect them once.
  std::vector<Point> dirs;
  for (const Face& e : p.face_lattice().faces_by_dim[1]) {
    const Point& a = p.vertices()[static_cast<size_t>(e.vertex_indices[0])];
    const Point& b = p.vertices()[static_cast<size_t>(e.vertex_indices[1])];
    Point d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
    dirs.push_back(std::move(d));
  }
  Int spread = 0;
  for (int d = 0; d < n; ++d) {
    Int mn = p.vertices()[0][static_cast<size_t>(d)], mx = mn;
    for (const Point& v : p.vertices()) {
      if (v[static_cast<size_t>(d)] < mn) mn = v[static_cast<size_t>(d)];
      if (v[static_cast<size_t>(d)] > mx) mx = v[static_cast<size_t>(d)];
    }
    if (mx - mn > spread) spread = mx - mn;
  }
  Int m = spread + 1;
  if (m < 2) m = 2;
  std::vector<std::vector<Int>> found;
  for (int attempts = 0; attempts < 10000 && static_cast<int>(found.size()) < count; ++attempts, ++m) {
    std::vector<Int> xi(static_cast<size_t>(n));
    Int power = 1;
    for (int d = 0; d < n; ++d) {
      xi[static_cast<size_t>(d)] = power;
      power *= m;
    }
    bool generic = true;
    for (const Point& dir : dirs)
      if (pairing(dir, xi) == 0) {
        generic = false;
        break;
      }
    if (generic) found.push_back(std::move(xi));
  }
  if (static_cast<int>(found.size()) < count) throw ConsistencyError("failed to find a generic covector");
  return found;
}

std::vector<Int> generic_covector(const LatticePolytope& p) { return generic_covectors(p, 1).front(); }

Int brion_count(const LatticePolytope& p, const std::vector<Int>& xi) {
  if (static_cast<int>(xi.size()) != p.ambient_dim()) throw std::invalid_argument("covector arity mismatch");
  if (!is_smooth(p)) throw HypothesisError("polytope not smooth");
  const int n = p.ambient_dim();
  Rational total = 0;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    total += ct_b_p(vertex_specialization(p, v, xi), n);
  // Individual vertex terms are rational; only the sum must be integral.
  return to_integer(total);
}

Int brion_volume(const LatticePolytope& p, const std::vector<Int>& xi) {
  if (static_cast<int>(xi.size()) != p.ambient_dim()) throw std::invalid_argument("covector arity mismatch");
  if (!is_smooth(p)) throw HypothesisError("polytope not smooth");
  const int n = p.ambient_dim();
  Rational total = 0;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    total += ct_v_p(vertex_specialization(p, v, xi), n);
  return to_integer(Rational(factorial(n)) * total);
}

IdentityReport verify_polytope_symfun_identity(const LatticePolytope& p, const std::vector<Int>& xi) {
  if (static_cast<int>(xi.size()) != p.ambient_dim()) throw std::invalid_argument("covector arity mismatch");
  if (!is_smooth(p)) throw HypothesisError("polytope not smooth");
  IdentityReport report;
  report.lhs = 0;
  report.rhs = 0;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    const Specialization spec = vertex_specialization(p, v, xi);
    report.lhs += theorem_lhs(spec);
    report.rhs += theorem_rhs(spec);
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace polydeg
