// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "liemult/rational.hpp"
#include "liemult/root_system.hpp"

namespace liemult {

// A maximal proper nested set of irreducible complete subsets of Delta+.
// Roots are referred to by their index in the frozen total order of the
// RootSystem, so "maximum of a member" is just the largest index.
struct MaximalNestedSet {
  std::vector<std::vector<int>> members;  // r members, each sorted ascending
  std::vector<int> phi;    // max root index of each member, aligned with members
  std::vector<int> theta;  // phi sorted ascending; an ordered basis
  Int volume;              // |det| of the theta matrix in simple-root coordinates
  // Inverse of the matrix whose columns are the simple-root coordinates of
  // theta: converts simple-root coordinates to theta-basis coordinates.
  std::vector<std::vector<Rational>> theta_inv;
};

// All irreducible complete subsets of Delta+, as sorted root index lists,
// deterministically ordered. A subset S is complete when S equals the set of
// positive roots inside span(S), and irreducible when it is connected in the
// matroid sense (not a disjoint union of two complete subsets spanning
// independent subspaces).
std::vector<std::vector<int>> irreducible_subsets(const RootSystem& rs);

// Exhaustive nestedness test: every antichain of members must union to a
// complete subset whose irreducible components are exactly the antichain.
// Exposed for cross-checking the enumerator.
bool is_nested_family(const RootSystem& rs,
                      const std::vector<std::vector<int>>& members);

std::vector<MaximalNestedSet> enumerate_mpns(const RootSystem& rs);

// Same, but consults a JSON cache file under cache_dir keyed by family, rank
// and order version. Pass an empty cache_dir to disable caching. A stale or
// corrupt cache entry is recomputed and rewritten.
std::vector<MaximalNestedSet> load_or_enumerate_mpns(const RootSystem& rs,
                                                     const std::string& cache_dir);

// The hyperplanes spanned by (rank-1)-subsets of positive roots, as primitive
// integer normal vectors in simple-root coordinate space, deduplicated with a
// canonical sign.
struct HyperplaneArrangement {
  std::vector<std::vector<Int>> normals;
};

HyperplaneArrangement build_arrangement(const RootSystem& rs);

bool is_regular(const HyperplaneArrangement& arr, const QVector& simple_coords);

// A regular point in the same closed chamber as a (which must lie in the
// closed cone C(Delta+)): a itself when regular, otherwise a + eps*delta for
// a fixed regular direction delta and a small enough rational eps.
Weight regular_perturbation(const RootSystem& rs, const HyperplaneArrangement& arr,
                            const Weight& a);
Weight regular_perturbation(const RootSystem& rs, const Weight& a);

// Indices of the nested sets whose theta-cone contains the regular point with
// the given simple-root coordinates. Throws SingularVectorError when the
// point lies on some theta-cone boundary.
std::vector<int> select_mpns(const std::vector<MaximalNestedSet>& mpns,
                             const QVector& simple_coords);

// Number of conic chambers of the arrangement inside C(Delta+), by breadth
// first search across chamber facets. Supported for rank <= 4.
int count_chambers(const RootSystem& rs);

}  // namespace liemult
