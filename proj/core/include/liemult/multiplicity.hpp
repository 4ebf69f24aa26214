// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liemult/partition.hpp"
#include "liemult/quasipoly.hpp"
#include "liemult/root_system.hpp"
#include "liemult/weyl.hpp"

namespace liemult {

// A quasipolynomial result stamped with the data that fixes its region of
// validity: which Weyl terms contributed and the chamber signature each of
// their partition arguments used.
struct FormalResult {
  QuasiPolynomial qp;
  std::string valid_set;              // comma-joined term labels
  std::vector<std::string> chambers;  // chamber signature per term
};

// Weight multiplicities and tensor product coefficients for one root system,
// through the alternating partition-function sums, plus the independent
// evaluations (Freudenthal recursion, character peel-off, straightening)
// used to cross-check them. Caches tables aggressively; keep one instance
// alive per root system.
class MultiplicityCalculator {
 public:
  explicit MultiplicityCalculator(const RootSystem& rs, EngineOptions opts = {});
  MultiplicityCalculator(Family family, int rank, EngineOptions opts = {});

  const RootSystem& rs() const { return engine_.root_system(); }
  PartitionEngine& engine() { return engine_; }

  // Multiplicity of the weight mu in the irreducible module V(lambda).
  Int weight_multiplicity(const Weight& lambda, const Weight& mu);

  // Coefficient of V(nu) in V(lambda) (x) V(mu).
  Int tensor_coefficient(const Weight& lambda, const Weight& mu,
                         const Weight& nu);

  // Independent multiplicity evaluation by the Freudenthal recursion.
  Int freudenthal_multiplicity(const Weight& lambda, const Weight& mu);

  // Dominant weight -> multiplicity for V(lambda), filled by the recursion.
  const std::map<QVector, Int, QVectorLess>& freudenthal_table(
      const Weight& lambda);

  // Every weight of V(lambda) with its multiplicity, orbit-expanded.
  const std::vector<std::pair<Weight, Int>>& full_weight_table(
      const Weight& lambda);

  Int weyl_dimension(const Weight& lambda) const;

  // Number of weights with nonzero multiplicity in V(lambda).
  Int weight_support_size(const Weight& lambda);

  // Full decomposition of V(lambda) (x) V(mu): dominant nu -> coefficient.
  // tensor_decompose straightens the shifted character sum; the peel variant
  // literally extracts highest weights from the product character and is the
  // slow reference the fast path is certified against.
  std::map<QVector, Int, QVectorLess> tensor_decompose(const Weight& lambda,
                                                       const Weight& mu);
  std::map<QVector, Int, QVectorLess> tensor_decompose_peel(const Weight& lambda,
                                                            const Weight& mu);

  // Coefficient of V(nu) read off a cached peel-off decomposition.
  Int tensor_oracle(const Weight& lambda, const Weight& mu, const Weight& nu);

  // The dominant Weyl-orbit representative of a weight.
  Weight dominant_representative(const Weight& w) const;
  // The lowest weight of V(lambda).
  Weight lowest_weight(const Weight& lambda) const;

  // Formal modes. Variables are x1..xd / y1..yd / z1..zd over the canonical
  // coordinates of lambda / mu / nu; the result is valid on the chambers
  // stamped into it (those of the base arguments).
  FormalResult multiplicity_quasipoly(const Weight& lambda, const Weight& mu);
  FormalResult tensor_quasipoly(const Weight& lambda, const Weight& mu,
                                const Weight& nu);

  // Stretched modes: quasipolynomials in t for m_{t lambda}(t mu) and
  // c_{t lambda, t mu}^{t nu}, valid for all large t (chamber of the ray).
  FormalResult multiplicity_stretch(const Weight& lambda, const Weight& mu);
  FormalResult tensor_stretch(const Weight& lambda, const Weight& mu,
                              const Weight& nu);

 private:
  // Dominant weights below top in the root order, paired with the height of
  // the difference, sorted by ascending height.
  std::vector<std::pair<QVector, long>> dominant_candidates(const Weight& top) const;
  void require_integral_dominant(const Weight& lambda) const;
  std::vector<Int> weight_key(const Weight& w, const char* what) const;
  std::vector<WeylElement> group_elements() const;

  PartitionEngine engine_;
  std::map<std::vector<Int>, std::map<QVector, Int, QVectorLess>> freud_cache_;
  std::map<std::vector<Int>, std::vector<std::pair<Weight, Int>>> fullwt_cache_;
  std::map<std::vector<Int>, std::map<QVector, Int, QVectorLess>> oracle_cache_;
  std::map<std::vector<Int>, Int> tensor_cache_;
};

}  // namespace liemult
