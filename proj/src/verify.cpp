// SPDX-License-Identifier: Apache-2.0
#include "polydeg/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "polydeg/discriminant.hpp"
#include "polydeg/ehrhart.hpp"
#include "polydeg/families.hpp"

namespace polydeg {

uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

long long Rng::range(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
}

Rational Rng::rational(long long max_abs_num, long long max_den) {
  return Rational(Int(range(-max_abs_num, max_abs_num)), Int(range(1, max_den)));
}

Rational Rng::nonzero_rational(long long max_abs_num, long long max_den) {
  while (true) {
    Rational q = rational(max_abs_num, max_den);
    if (q != 0) return q;
  }
}

PolyVector random_poly_vector(Rng& rng, int n) {
  std::vector<Polynomial> entries;
  for (int j = 0; j <= n; ++j) {
    const int deg = static_cast<int>(rng.below(static_cast<uint64_t>(j) + 1));
    std::vector<Rational> coeffs;
    for (int k = 0; k <= deg; ++k) coeffs.push_back(rng.rational(9, 6));
    entries.emplace_back(std::move(coeffs));
  }
  return PolyVector(n, std::move(entries));
}

Specialization random_specialization(Rng& rng, int n) {
  std::vector<Rational> x;
  for (int a = 0; a < n; ++a) x.push_back(rng.nonzero_rational(7, 5));
  return Specialization(rng.rational(7, 5), std::move(x));
}

LatticePolytope random_unimodular_image(Rng& rng, const LatticePolytope& p) {
  const int n = p.ambient_dim();
  // Random elementary row operations keep det = +-1; entries stay <= 3.
  std::vector<std::vector<Int>> u(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (int step = 0; step < 8 * n; ++step) {
    if (n < 2) break;
    const int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    if (i == j) continue;
    const int sign = rng.below(2) ? 1 : -1;
    std::vector<Int> candidate = u[static_cast<size_t>(i)];
    bool ok = true;
    for (int c = 0; c < n; ++c) {
      candidate[static_cast<size_t>(c)] += sign * u[static_cast<size_t>(j)][static_cast<size_t>(c)];
      if (candidate[static_cast<size_t>(c)] > 3 || candidate[static_cast<size_t>(c)] < -3) ok = false;
    }
    if (ok) u[static_cast<size_t>(i)] = std::move(candidate);
  }
  std::vector<Int> shift(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) shift[static_cast<size_t>(d)] = rng.range(-4, 4);

  std::vector<Point> mapped;
  for (const Point& v : p.vertices()) {
    Point w(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
      Int acc = shift[static_cast<size_t>(r)];
      for (int c = 0; c < n; ++c) acc += u[static_cast<size_t>(r)][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
      w[static_cast<size_t>(r)] = acc;
    }
    mapped.push_back(std::move(w));
  }
  return build_polytope(std::move(mapped), p.name() + "+unimod");
}

std::vector<LatticePolytope> verification_corpus() {
  std::vector<LatticePolytope> corpus;
  for (int n = 1; n <= 4; ++n) corpus.push_back(gen_family("cube", {n}));
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) corpus.push_back(gen_family("simplex", {n, d}));
  for (int n = 2; n <= 4; ++n) corpus.push_back(gen_family("prism", {n}));
  corpus.push_back(gen_family("product", {2, 2}));
  corpus.push_back(gen_family("product", {1, 1, 2}));
  for (int d = 1; d <= 10; ++d) corpus.push_back(gen_family("segment", {d}));
  return corpus;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& detail) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.failure_notes.size() < 20) result_.failure_notes.push_back(detail);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult suite_involution(uint64_t seed) {
  Suite suite("involution");
  Rng rng(seed ^ 0x1a2b3c4dULL);
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng.below(8));
    PolyVector e = random_poly_vector(rng, n);
    suite.expect(s_transform(s_transform(e)) == e, "S^2 != 1 at n=" + std::to_string(n));
  }
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.below(6));
    PolyVector e = random_poly_vector(rng, n);
    const Rational t0 = rng.rational(9, 6);
    suite.expect(check_generating_identity(e, t0).equal, "generating identity failed at n=" + std::to_string(n));
  }
  return suite.take();
}

SuiteResult suite_dehn_sommerville(uint64_t seed) {
  (void)seed;
  Suite suite("dehn-sommerville");
  for (const LatticePolytope& p : verification_corpus()) {
    ScalarVector f;
    for (const Int& count : p.face_lattice().f_vector) f.push_back(Rational(count));
    suite.expect(s_transform(f) == f, p.name() + ": f-vector not fixed by S");

    EhrhartVector e = ehrhart_vector(p);
    PolyVector ev(p.ambient_dim(), e.entries);
    PolyVector fv = s_transform(ev);
    bool extended = true;
    for (int dim = 0; dim <= p.ambient_dim(); ++dim)
      if (fv.entry(dim) != ev.entry(dim).reflected()) extended = false;
    suite.expect(extended, p.name() + ": extended identity F_p(t)=E_p(-t) failed");
  }

  // Negative control: both identities must fail for the square pyramid.
  const LatticePolytope pyramid = square_pyramid();
  ScalarVector f;
  for (const Int& count : pyramid.face_lattice().f_vector) f.push_back(Rational(count));
  suite.expect(s_transform(f) != f, "square pyramid f-vector unexpectedly fixed by S");
  EhrhartVector e = ehrhart_vector(pyramid);
  PolyVector ev(pyramid.ambient_dim(), e.entries);
  PolyVector fv = s_transform(ev);
  bool some_mismatch = false;
  for (int dim = 0; dim <= pyramid.ambient_dim(); ++dim)
    if (fv.entry(dim) != ev.entry(dim).reflected()) some_mismatch = true;
  suite.expect(some_mismatch, "square pyramid unexpectedly satisfies the extended identity");
  return suite.take();
}

SuiteResult suite_reciprocity(uint64_t seed) {
  (void)seed;
  Suite suite("reciprocity");
  for (const LatticePolytope& p : verification_corpus()) {
    for (const auto& faces : p.face_lattice().faces_by_dim) {
      for (const Face& face : faces) {
        const Polynomial ehr = ehrhart_polynomial(p, face);
        for (int i = 1; i <= 4; ++i) {
          const Rational via_poly = Rational(parity_sign(face.dim)) * ehr(Rational(-i));
          const Int direct = count_interior_points(p, face, i);
          suite.expect(is_integral(via_poly) && to_integer(via_poly) == direct,
                       p.name() + ": reciprocity failed on a face of dim " + std::to_string(face.dim));
        }
      }
    }
  }
  return suite.take();
}

SuiteResult suite_theorem_nill(uint64_t seed) {
  Suite suite("theorem-nill");
  Rng rng(seed ^ 0x9e0f17ULL);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < 500; ++k) {
      PolyVector e = random_poly_vector(rng, n);
      suite.expect(c_via_theorem(e) == c_of_vector(e), "c mismatch at n=" + std::to_string(n));
    }
  }
  return suite.take();
}

SuiteResult suite_theorem_degree(uint64_t seed) {
  (void)seed;
  Suite suite("theorem-degree");
  for (const LatticePolytope& p : verification_corpus()) {
    suite.expect(is_simple(p), p.name() + ": corpus polytope not simple");
    const Int via_volumes = degree_via_volumes(p).c;
    const Int via_interior = degree_via_interior_points(p);
    suite.expect(via_volumes == via_interior,
                 p.name() + ": " + to_string(via_volumes) + " != " + to_string(via_interior));
  }
  for (int d = 1; d <= 10; ++d) {
    const Int c = degree_via_volumes(gen_family("segment", {d})).c;
    suite.expect(c == 2 * (d - 1), "segment:" + std::to_string(d) + " degree " + to_string(c));
  }
  for (int d = 1; d <= 5; ++d) {
    const Int c = degree_via_volumes(gen_family("simplex", {2, d})).c;
    suite.expect(c == 3 * (d - 1) * (d - 1), "simplex:2:" + std::to_string(d) + " degree " + to_string(c));
  }
  suite.expect(degree_via_volumes(gen_family("prism", {3})).c == 0, "prism:3 degree nonzero");
  suite.expect(degree_via_volumes(gen_family("cube", {2})).c == 2, "cube:2 degree wrong");
  return suite.take();
}

SuiteResult suite_symfun(uint64_t seed) {
  Suite suite("symfun");
  Rng rng(seed ^ 0x5f3cafULL);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 50; ++k) {
      const Specialization spec = random_specialization(rng, n);
      const IdentityReport report = verify_symfun_identity(n, spec);
      suite.expect(report.equal, "constant-term identity failed at n=" + std::to_string(n));
    }
  }
  for (const LatticePolytope& p : verification_corpus()) {
    const IdentityReport report = verify_polytope_symfun_identity(p, generic_covector(p));
    const Int c = degree_via_volumes(p).c;
    suite.expect(report.equal && report.lhs == Rational(c),
                 p.name() + ": vertex-summed identity does not give c(P)");
  }
  return suite.take();
}

SuiteResult suite_brion(uint64_t seed) {
  (void)seed;
  Suite suite("brion");
  for (const LatticePolytope& p : verification_corpus()) {
    suite.expect(is_smooth(p), p.name() + ": corpus polytope not smooth");
    const Int count = count_lattice_points(p, p.whole_face(), 1);
    const Int volume = normalized_volume(p, p.whole_face());
    for (const auto& xi : generic_covectors(p, 3)) {
      suite.expect(brion_count(p, xi) == count, p.name() + ": vertex-cone count mismatch");
      suite.expect(brion_volume(p, xi) == volume, p.name() + ": vertex-cone volume mismatch");
    }
  }
  return suite.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "involution", "dehn-sommerville", "reciprocity", "theorem-nill", "theorem-degree", "symfun", "brion"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& which, uint64_t seed) {
  std::vector<SuiteResult> results;
  auto run_one = [&](const std::string& name) {
    if (name == "involution") return suite_involution(seed);
    if (name == "dehn-sommerville") return suite_dehn_sommerville(seed);
    if (name == "reciprocity") return suite_reciprocity(seed);
    if (name == "theorem-nill") return suite_theorem_nill(seed);
    if (name == "theorem-degree") return suite_theorem_degree(seed);
    if (name == "symfun") return suite_symfun(seed);
    if (name == "brion") return suite_brion(seed);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
  };
  if (which == "all") {
    for (const std::string& name : suite_names()) results.push_back(run_one(name));
  } else {
    results.push_back(run_one(which));
  }
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (r.failures != 0) return false;
  return true;
}

}  // namespace polydeg
