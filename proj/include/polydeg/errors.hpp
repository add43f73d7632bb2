// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polydeg {

// An internal cross-check failed.  This never represents valid data; it
// converts silent bugs into loud errors (CLI exit code 2).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A stated hypothesis of an operation does not hold for the given input
// (CLI exit code 3 when surfaced through --require-simple).
class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input document (CLI exit code 1).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polydeg
