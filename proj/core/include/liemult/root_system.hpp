// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "liemult/rational.hpp"

namespace liemult {

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);  // "A".."D", throws UsageError
std::string family_name(Family f);

// Weights are exact rational coordinate vectors in the canonical basis;
// the ambient dimension is rank+1 for A and rank otherwise.
using Weight = QVector;

// Total order on the positive roots. Everything downstream (phi, theta,
// residue order) depends on it, so it is part of the root system identity.
// LexCanonical is the frozen default: ascending lexicographic on canonical
// coordinates, largest root last. LexReversed (ascending lexicographic on the
// reversed coordinate vector) exists to property-test order independence.
enum class TotalOrder { LexCanonical, LexReversed };

struct QVectorLess {
  bool operator()(const QVector& a, const QVector& b) const;
};

class RootSystem {
 public:
  RootSystem(Family family, int rank,
             TotalOrder order = TotalOrder::LexCanonical);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  TotalOrder order() const { return order_; }
  const std::string& order_version() const { return order_version_; }

  // Ascending in the total order; the vector index is the order index.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  // alpha_1..alpha_r in the family's Dynkin order.
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  int num_positive_roots() const {
    return static_cast<int>(positive_roots_.size());
  }
  // Positions of the simple roots inside positive_roots().
  const std::vector<int>& simple_indices() const { return simple_indices_; }
  const std::vector<Weight>& fundamental_weights() const {
    return fundamental_weights_;
  }
  const Weight& rho() const { return rho_; }

  // Integer simple-root coordinates of each positive root.
  const std::vector<std::vector<int>>& root_simple_coords() const {
    return root_simple_coords_;
  }

  // Position of a root in the total order; -1 if not a positive root.
  int root_index(const Weight& root) const;

  // Coefficients c with w = sum c_i alpha_i. For family A the coordinate sum
  // must vanish (UsageError otherwise); the other families span the ambient
  // space.
  QVector simple_root_coords(const Weight& w) const;

  bool in_positive_cone(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;
  bool is_dominant(const Weight& w) const;

  Weight from_funda_to_cano(const QVector& v) const;
  QVector from_cano_to_funda(const Weight& w) const;

  // <a, b> for canonical-coordinate vectors (standard inner product).
  static Rational inner(const Weight& a, const Weight& b);

  // 2(w, alpha)/(alpha, alpha) against the i-th simple root.
  Rational pair_coroot(const Weight& w, size_t i) const;

 private:
  void build_roots();
  void build_fundamentals();

  Family family_;
  int rank_;
  int dim_;
  TotalOrder order_;
  std::string order_version_;
  std::vector<Weight> positive_roots_;
  std::vector<Weight> simple_roots_;
  std::vector<int> simple_indices_;
  std::vector<Weight> fundamental_weights_;
  Weight rho_;
  std::vector<std::vector<int>> root_simple_coords_;
  std::map<QVector, int, QVectorLess> index_of_root_;
};

inline RootSystem build_root_system(Family family, int rank,
                                    TotalOrder order =
                                        TotalOrder::LexCanonical) {
  return RootSystem(family, rank, order);
}

}  // namespace liemult
