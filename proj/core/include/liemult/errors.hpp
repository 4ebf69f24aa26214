// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace liemult {

// Bad input from the caller/user: wrong arity, rank out of bounds,
// non-dominant weight where dominance is required, unparsable rational.
// The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (wrong variable ordering, truncation shortfall,
// non-power-of-2 torus order, ...). The CLI maps this to exit code 1.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Thrown by select_mpns when the query vector lies on a cone wall; the caller
// is expected to re-perturb and retry.
class SingularVectorError : public std::runtime_error {
 public:
  explicit SingularVectorError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace liemult
