// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polydeg/ehrhart.hpp"
#include "polydeg/families.hpp"
#include "polydeg/involution.hpp"
#include "polydeg/verify.hpp"

using namespace polydeg;

namespace {

ScalarVector scalars(std::vector<long long> v) {
  ScalarVector out;
  for (long long x : v) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("s_transform on scalar vectors") {
  // f-vector of the 3-cube is a fixed point.
  CHECK(s_transform(scalars({8, 12, 6, 1})) == scalars({8, 12, 6, 1}));
  // n = 1: [1, x] -> [1, 1-x].
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Rational x = rng.rational(9, 5);
    ScalarVector image = s_transform(ScalarVector{Rational(1), x});
    CHECK(image == ScalarVector{Rational(1), Rational(1) - x});
  }
  // The square pyramid's f-vector is not fixed.
  CHECK(s_transform(scalars({5, 8, 5, 1})) != scalars({5, 8, 5, 1}));
}

TEST_CASE("s_transform is an involution") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(8));
    PolyVector e = random_poly_vector(rng, n);
    CHECK(s_transform(s_transform(e)) == e);
  }
}

TEST_CASE("degree bound is validated") {
  CHECK_THROWS_AS(PolyVector(1, {Polynomial::constant(Rational(1)),
                                 Polynomial::monomial(2, Rational(1))}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolyVector(2, {Polynomial::constant(Rational(1))}), std::invalid_argument);
}

TEST_CASE("generating identity in z") {
  // Unit square f-vector: both sides are z^2 + 4z + 4.
  PolyVector square = PolyVector::from_scalars(scalars({4, 4, 1}));
  GeneratingIdentityReport report = check_generating_identity(square, Rational(0));
  CHECK(report.equal);
  CHECK(report.lhs_z == Polynomial(std::vector<Rational>{Rational(4), Rational(4), Rational(1)}));
  CHECK(report.rhs_z == report.lhs_z);

  // E = [1, 0, ..., 0]: both sides are (z+1)^n.
  for (int n = 1; n <= 5; ++n) {
    std::vector<Polynomial> entries(static_cast<size_t>(n) + 1);
    entries[0] = Polynomial::constant(Rational(1));
    GeneratingIdentityReport r = check_generating_identity(PolyVector(n, entries), Rational(3));
    CHECK(r.equal);
    Polynomial expected = Polynomial::constant(Rational(1));
    Polynomial z1(std::vector<Rational>{Rational(1), Rational(1)});
    for (int k = 0; k < n; ++k) expected = expected * z1;
    CHECK(r.lhs_z == expected);
  }

  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    PolyVector e = random_poly_vector(rng, 5);
    CHECK(check_generating_identity(e, rng.rational(9, 5)).equal);
  }
}

TEST_CASE("c_of_vector") {
  for (long long d = 1; d <= 6; ++d) {
    // Ehrhart vector of segment [0, d]: [2, dt + 1].
    PolyVector e(1, {Polynomial::constant(Rational(2)),
                     Polynomial(std::vector<Rational>{Rational(1), Rational(d)})});
    CHECK(c_of_vector(e) == Rational(2 * d - 2));
  }
  PolyVector zero(3, std::vector<Polynomial>(4));
  CHECK(c_of_vector(zero) == 0);

  // Unit square Ehrhart vector [4, 4t+4, (t+1)^2]: v = [4,4,2], c = 4-8+6 = 2.
  PolyVector square(2, {Polynomial::constant(Rational(4)),
                        Polynomial(std::vector<Rational>{Rational(4), Rational(4)}),
                        Polynomial(std::vector<Rational>{Rational(1), Rational(2), Rational(1)})});
  CHECK(c_of_vector(square) == 2);
}

TEST_CASE("c_via_theorem matches on hand examples") {
  for (long long d = 1; d <= 6; ++d) {
    PolyVector e(1, {Polynomial::constant(Rational(2)),
                     Polynomial(std::vector<Rational>{Rational(1), Rational(d)})});
    CHECK(c_via_theorem(e) == Rational(2 * d - 2));
  }
  PolyVector zero(4, std::vector<Polynomial>(5));
  CHECK(c_via_theorem(zero) == 0);

  // n = 0 extension: c(E) = E_0.
  PolyVector constant(0, {Polynomial::constant(Rational(7, 3))});
  CHECK(c_via_theorem(constant) == Rational(7, 3));
  CHECK(c_of_vector(constant) == Rational(7, 3));
}

TEST_CASE("c_via_theorem equals c_of_vector on random vectors") {
  Rng rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      PolyVector e = random_poly_vector(rng, n);
      CHECK(c_via_theorem(e) == c_of_vector(e));
    }
  }
}

TEST_CASE("elementary symmetric values transform to the shifted ones") {
  // S maps [sigma_0(x), ..., sigma_n(x)] to [sigma_0(1-x), ..., sigma_n(1-x)].
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    std::vector<Rational> x;
    for (int a = 0; a < n; ++a) x.push_back(rng.rational(9, 5));

    auto elementary = [&](const std::vector<Rational>& values) {
      // coefficients of prod (v z + 1)
      std::vector<Rational> coeffs{Rational(1)};
      for (const Rational& v : values) {
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        for (size_t i = 0; i < coeffs.size(); ++i) {
          next[i] += coeffs[i];
          next[i + 1] += coeffs[i] * v;
        }
        coeffs = std::move(next);
      }
      return coeffs;
    };

    std::vector<Rational> shifted;
    for (const Rational& v : x) shifted.push_back(Rational(1) - v);
    CHECK(s_transform(elementary(x)) == elementary(shifted));
  }
}

TEST_CASE("extended identity on polytopes, positive and negative") {
  for (const LatticePolytope& p :
       {gen_family("cube", {3}), gen_family("prism", {3}), gen_family("simplex", {3, 2})}) {
    EhrhartVector e = ehrhart_vector(p);
    PolyVector ev(p.ambient_dim(), e.entries);
    PolyVector fv = s_transform(ev);
    for (int dim = 0; dim <= p.ambient_dim(); ++dim) CHECK(fv.entry(dim) == ev.entry(dim).reflected());
  }

  LatticePolytope pyramid = square_pyramid();
  EhrhartVector e = ehrhart_vector(pyramid);
  PolyVector ev(pyramid.ambient_dim(), e.entries);
  PolyVector fv = s_transform(ev);
  bool mismatch = false;
  for (int dim = 0; dim <= pyramid.ambient_dim(); ++dim)
    if (fv.entry(dim) != ev.entry(dim).reflected()) mismatch = true;
  CHECK(mismatch);
}
