// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "liemult/root_system.hpp"

namespace liemult {

// Signed permutation acting on canonical coordinates:
// (w v)_i = signs[i] * v[perm[i]]. Family A has all signs +1, family D an
// even number of -1 signs.
struct WeylElement {
  std::vector<int> perm;       // bijection of 0..dim-1
  std::vector<int8_t> signs;   // +1 / -1 per output position

  int sign() const;  // determinant: permutation parity times sign product
};

Weight apply(const WeylElement& w, const Weight& v);

// Streams each group element exactly once; never materializes the group.
void weyl_enumerate(const RootSystem& rs,
                    const std::function<void(const WeylElement&)>& fn);

Int weyl_order(const RootSystem& rs);

// One summand of Kostant's or Steinberg's formula: the sign character and the
// translated argument, which lies in C(Delta+) by construction.
struct ValidTerm {
  int sign;         // (-1)^{eps(w)} or (-1)^{eps(w)+eps(w')}
  Weight argument;  // w(lambda+rho)-(mu+rho) or w(lambda+rho)+w'(mu+rho)-(nu+2rho)
};

// All w with w(lambda+rho)-(mu+rho) in C(Delta+). lambda must be dominant.
// Empty when lambda-mu is outside the root lattice (no enumeration happens).
std::vector<ValidTerm> valid_elements(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu);

// All pairs (w,w') with w(lambda+rho)+w'(mu+rho)-(nu+2rho) in C(Delta+),
// enumerated with a branch-and-bound over the inner element: the inner signed
// permutation is built coordinate by coordinate and a branch is cut as soon
// as the partial simple-coordinate prefixes cannot be completed to an
// all-nonnegative vector by any assignment of the remaining values.
std::vector<ValidTerm> valid_pairs(const RootSystem& rs, const Weight& lambda,
                                   const Weight& mu, const Weight& nu);

// Reference double scan, for equivalence testing against valid_pairs.
std::vector<ValidTerm> valid_pairs_naive(const RootSystem& rs,
                                         const Weight& lambda,
                                         const Weight& mu, const Weight& nu);

}  // namespace liemult
