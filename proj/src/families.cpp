// SPDX-License-Identifier: Apache-2.0
#include "polydeg/families.hpp"

#include <sstream>
#include <stdexcept>

namespace polydeg {

namespace {

// conv{0, d e_1, ..., d e_n} with the canonical vertex order 0, d e_1, ...
std::vector<Point> simplex_vertices(int n, int d) {
  std::vector<Point> v;
  v.emplace_back(static_cast<size_t>(n), Int(0));
  for (int i = 0; i < n; ++i) {
    Point e(static_cast<size_t>(n), Int(0));
    e[static_cast<size_t>(i)] = d;
    v.push_back(std::move(e));
  }
  return v;
}

std::vector<Point> cube_vertices(int n) {
  std::vector<Point> v;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    Point q(static_cast<size_t>(n));
    for (int d = 0; d < n; ++d) q[static_cast<size_t>(d)] = (mask >> d) & 1;
    v.push_back(std::move(q));
  }
  return v;
}

std::vector<Point> product_vertices(const std::vector<int>& dims) {
  std::vector<std::vector<Point>> factors;
  for (int d : dims) factors.push_back(simplex_vertices(d, 1));
  std::vector<Point> out{Point{}};
  for (const auto& factor : factors) {
    std::vector<Point> next;
    for (const Point& prefix : out)
      for (const Point& q : factor) {
        Point joined = prefix;
        joined.insert(joined.end(), q.begin(), q.end());
        next.push_back(std::move(joined));
      }
    out = std::move(next);
  }
  return out;
}

void require_positive(const std::vector<int>& params) {
  for (int v : params)
    if (v <= 0) throw std::invalid_argument("family parameter must be positive");
}

std::string join_params(const std::vector<int>& params, char sep) {
  std::ostringstream out;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out << sep;
    out << params[i];
  }
  return out.str();
}

}  // namespace

LatticePolytope gen_family(const std::string& family, const std::vector<int>& params) {
  require_positive(params);
  if (family == "cube") {
    if (params.size() != 1) throw std::invalid_argument("cube expects one parameter (dimension)");
    return build_polytope(cube_vertices(params[0]), "cube:" + join_params(params, ':'));
  }
  if (family == "simplex" || family == "dilated_simplex") {
    if (params.size() != 2) throw std::invalid_argument("simplex expects two parameters (dimension, dilation)");
    return build_polytope(simplex_vertices(params[0], params[1]), "simplex:" + join_params(params, ':'));
  }
  if (family == "segment") {
    if (params.size() != 1) throw std::invalid_argument("segment expects one parameter (length)");
    return build_polytope({{Int(0)}, {Int(params[0])}}, "segment:" + join_params(params, ':'));
  }
  if (family == "prism") {
    if (params.size() != 1) throw std::invalid_argument("prism expects one parameter (dimension)");
    if (params[0] < 2) throw std::invalid_argument("prism dimension must be at least 2");
    return build_polytope(product_vertices({1, params[0] - 1}), "prism:" + join_params(params, ':'));
  }
  if (family == "product" || family == "product_of_simplices") {
    if (params.empty()) throw std::invalid_argument("product expects at least one simplex dimension");
    return build_polytope(product_vertices(params), "product:" + join_params(params, ','));
  }
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

LatticePolytope gen_family_spec(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos || colon + 1 == spec.size())
    throw std::invalid_argument("family spec must look like name:params, got \"" + spec + "\"");
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  const char sep = (name == "product" || name == "product_of_simplices") ? ',' : ':';
  std::vector<int> params;
  std::istringstream in(rest);
  std::string token;
  while (std::getline(in, token, sep)) {
    try {
      size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
      params.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid family parameter \"" + token + "\" in \"" + spec + "\"");
    }
  }
  if (params.empty()) throw std::invalid_argument("family spec has no parameters: \"" + spec + "\"");
  return gen_family(name, params);
}

LatticePolytope square_pyramid() {
  return build_polytope(
      {{Int(1), Int(1), Int(0)},
       {Int(-1), Int(1), Int(0)},
       {Int(1), Int(-1), Int(0)},
       {Int(-1), Int(-1), Int(0)},
       {Int(0), Int(0), Int(1)}},
      "square-pyramid");
}

}  // namespace polydeg
