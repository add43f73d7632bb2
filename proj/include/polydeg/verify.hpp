// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polydeg/involution.hpp"
#include "polydeg/polytope.hpp"
#include "polydeg/symfun.hpp"

namespace polydeg {

// splitmix64: tiny, fully deterministic across platforms, so verification
// runs are byte-identical for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  uint64_t below(uint64_t bound);                 // uniform in [0, bound)
  long long range(long long lo, long long hi);    // uniform in [lo, hi]
  Rational rational(long long max_abs_num, long long max_den);
  Rational nonzero_rational(long long max_abs_num, long long max_den);

 private:
  uint64_t state_;
};

PolyVector random_poly_vector(Rng& rng, int n);
Specialization random_specialization(Rng& rng, int n);

// Image of p under a random unimodular map (entries bounded by 3) plus a
// small lattice translation; c(P) must be invariant under these.
LatticePolytope random_unimodular_image(Rng& rng, const LatticePolytope& p);

// The standard corpus: cube(n) n=1..4, d*simplex(n) d=1..3 n=1..3,
// prism(n) n=2..4, simplex(2) x simplex(2), simplex(1)^2 x simplex(2),
// segments d=1..10.  Every entry is simple and smooth.
std::vector<LatticePolytope> verification_corpus();

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_notes;
};

const std::vector<std::string>& suite_names();

// which is one of suite_names() or "all"; throws std::invalid_argument for
// anything else.  Deterministic given the seed.
std::vector<SuiteResult> run_suites(const std::string& which, uint64_t seed);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace polydeg
