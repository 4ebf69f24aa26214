// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemult/multipoly.hpp"
#include "liemult/nested_sets.hpp"
#include "liemult/quasipoly.hpp"
#include "liemult/rational.hpp"
#include "liemult/root_system.hpp"

namespace liemult {

// Element of the finite torus subgroup attached to a chamber. tau is twice
// the element in the basis dual to the simple roots, reduced mod 2, so the
// character value on a root-lattice point with simple-root coordinates c is
// (-1)^<c,tau>. Every subgroup we meet has exponent <= 2, which is asserted.
struct TorusElement {
  std::vector<int> tau;  // entries in {0,1}
  bool is_identity() const;
};

// T(sigma) for a linearly independent rank-sized subset sigma of positive
// roots (given by order indices): the points with integral pairing against
// every member of sigma, modulo the lattice dual to the root lattice.
std::vector<TorusElement> torus_subgroup(const RootSystem& rs,
                                         const std::vector<int>& sigma);

struct EngineOptions {
  std::string cache_dir;    // nested-set cache location; empty disables it
  int jobs = 1;             // worker hint; evaluation is sequential
  int perturb_variant = 0;  // selects an alternative regular direction
};

struct EngineStats {
  long long partition_evals = 0;
  long long partition_cache_hits = 0;
  long long chambers_built = 0;
  long long boxes_built = 0;
  long long box_states = 0;
};

// One summand of a formal evaluation: (-1)^phase * value, with phase an
// affine form in the ambient variables (integral on lattice arguments).
struct FormalTerm {
  MultiPoly phase;
  MultiPoly value;
};

// A formal evaluation together with the signature of the chamber it is valid
// on; the polynomials agree with the counting function on that chamber's
// closure only.
struct FormalEvaluation {
  std::vector<FormalTerm> terms;
  std::string chamber;
};

// Evaluates the vector partition function of the positive roots through the
// residue decomposition indexed by maximal nested sets. Heavy pieces (nested
// sets, chamber data, residue boxes, values) are cached inside the engine, so
// callers should keep one engine per root system alive.
class PartitionEngine {
 public:
  explicit PartitionEngine(const RootSystem& rs, EngineOptions opts = {});

  const RootSystem& root_system() const { return rs_; }
  const std::vector<MaximalNestedSet>& nested_sets() const { return mpns_; }
  const HyperplaneArrangement& arrangement() const { return arr_; }
  const EngineStats& stats() const { return stats_; }

  // Number of ways to write a as a nonnegative integer combination of
  // positive roots; zero off the root lattice or outside the cone.
  Int kostant_partition(const Weight& a);

  // Independent evaluation by dynamic programming over the coordinate box
  // below a. Cross-check oracle; cost grows with the product of coordinates.
  Int kostant_partition_dp(const Weight& a) const;

  // Quasipolynomial in the single variable "t" equal to
  // kostant_partition(t*A + B) for all large integer t (and on the whole
  // closed chamber swept by the ray). Both A and B must be lattice vectors.
  QuasiPolynomial kostant_stretch(const Weight& A, const Weight& B);

  // Formal evaluation on the chamber of base: canonical_forms are the
  // canonical coordinates of the argument as polynomials in some shared
  // variable universe. Empty terms when base lies outside the cone.
  FormalEvaluation formal_terms(const std::vector<MultiPoly>& canonical_forms,
                                const Weight& base);

  // As formal_terms, on the chamber containing A*t + B for all large t,
  // resolved lexicographically. nullopt when the ray leaves the cone, in
  // which case the counting function is identically zero there.
  std::optional<FormalEvaluation> formal_terms_on_ray(
      const std::vector<MultiPoly>& canonical_forms, const Weight& A,
      const Weight& B);

  // Simple-root coordinates of a formal weight given by canonical coordinate
  // forms. For family A the result is meaningful on the sum-zero locus only,
  // which all internal callers guarantee.
  std::vector<MultiPoly> simple_coord_forms(
      const std::vector<MultiPoly>& canonical_forms) const;

  // Iterated-residue value of exp(<a,z>) / prod_alpha <alpha,z>^mult[alpha]
  // summed over the nested sets selected by the chamber of chamber_point.
  // mult is indexed by root order index.
  Rational rational_residue(const std::vector<int>& mult, const Weight& a,
                            const Weight& chamber_point);

  // Chamber signatures, exposed for stamping formal results.
  std::string chamber_key(const Weight& a);
  std::string chamber_key_on_ray(const Weight& A, const Weight& B);

 private:
  // A point resolved lexicographically: the actual location first, then tie
  // breakers, with the regular direction always last so every sign test is
  // decided.
  using LexPoint = std::vector<QVector>;

  struct ChamberData {
    std::vector<int> selected;            // indices into mpns_
    std::vector<std::vector<int>> taus;   // deduplicated torus parities
  };

  // Residue box: exponent vector of the exponential contribution mapped to
  // its rational coefficient, with 1/volume and the inverse factorials
  // already folded in. Evaluation is then sum_e C_e * prod_k l_k^e_k.
  using PreparedBox = std::map<std::vector<int>, Rational>;

  std::string lex_key(const LexPoint& p) const;
  const ChamberData& chamber(const LexPoint& p);
  const PreparedBox& negbox(int mpns_index, const std::vector<int>& tau);
  const std::vector<std::vector<int>>& sigma_taus(int basic_index);
  void ensure_basic_subsets();
  FormalEvaluation formal_eval(const std::vector<MultiPoly>& canonical_forms,
                               const LexPoint& p);

  RootSystem rs_;
  EngineOptions opts_;
  EngineStats stats_;
  std::vector<MaximalNestedSet> mpns_;
  HyperplaneArrangement arr_;
  QVector delta_;  // regular direction in simple-root coordinates

  bool basic_subsets_ready_ = false;
  std::vector<std::vector<int>> basic_subsets_;  // rank-sized root index sets
  std::map<int, std::vector<std::vector<int>>> sigma_tau_cache_;

  std::map<std::string, ChamberData> chambers_;
  std::map<std::pair<int, std::vector<int>>, PreparedBox> boxes_;
  std::map<std::vector<Int>, Int> memo_;
};

}  // namespace liemult
