// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "liemult/multipoly.hpp"

namespace liemult {

// Truncated Laurent series in one active variable, with coefficients that are
// polynomials in the remaining variables. Exponents >= trunc are unknown.
// Invariants: coeffs.size() == trunc - lowest, and a nonzero series has a
// nonzero leading (lowest-exponent) coefficient.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  // Coefficients are given for exponents lowest, lowest+1, ..., trunc-1.
  static LaurentSeries make(std::string var, int lowest,
                            std::vector<MultiPoly> coeffs, int trunc);

  static LaurentSeries constant(std::string var,
                                std::vector<std::string> coeff_vars,
                                const Rational& c, int trunc);

  const std::string& var() const { return var_; }
  int lowest() const { return lowest_; }
  int trunc() const { return trunc_; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of var^k (zero polynomial when k < lowest; requires k < trunc).
  MultiPoly coeff(int k) const;

  std::string str() const;

 private:
  friend LaurentSeries series_mul(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries series_invert(const LaurentSeries&);

  std::string var_;
  int lowest_ = 0;
  int trunc_ = 0;
  std::vector<MultiPoly> coeffs_;
  std::vector<std::string> coeff_vars_;
};

// Exact product, truncated at min(a.trunc + b.lowest, b.trunc + a.lowest).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

// Multiplicative inverse: a * series_invert(a) = 1 up to truncation. The
// leading coefficient must be a nonzero scalar; anything else signals a wrong
// variable ordering upstream and raises InternalError.
LaurentSeries series_invert(const LaurentSeries& a);

// Coefficient of (active variable)^-1. Requires trunc >= 0.
MultiPoly residue_coeff(const LaurentSeries& a);

}  // namespace liemult
