// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liemult/rational.hpp"

namespace liemult {

// Multivariate polynomial over Q with a fixed ordered variable universe.
// Terms map dense exponent vectors (one entry per variable, >= 0) to nonzero
// coefficients; the map ordering makes serialization deterministic.
class MultiPoly {
 public:
  using Exponents = std::vector<int32_t>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // True when the polynomial is a constant (possibly zero).
  bool is_constant() const;
  // Constant term; the whole value if is_constant().
  Rational constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const;

  Rational eval(const QVector& point) const;

  // Deterministic text form, e.g. "3*x1^2*y1 - 1/2".
  std::string str() const;

 private:
  void check_universe(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace liemult
