// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liemult/multipoly.hpp"

namespace liemult {

// Polynomial in formal variables whose coefficients are period-2 periodic
// rationals. Each term stores the pair (even-class value, odd-class value);
// the class is the parity of <parity_form, point>.
class QuasiPolynomial {
 public:
  using Exponents = std::vector<int32_t>;
  using ClassPair = std::pair<Rational, Rational>;  // (even, odd)

  QuasiPolynomial() = default;
  QuasiPolynomial(std::vector<std::string> vars, std::vector<Int> parity_form);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Int>& parity_form() const { return parity_form_; }
  const std::map<Exponents, ClassPair>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& even, const Rational& odd);

  // Adds poly to one or both parity classes.
  void accumulate(const MultiPoly& poly, bool to_even, bool to_odd);

  QuasiPolynomial operator+(const QuasiPolynomial& o) const;

  // Picks the class by the parity of <parity_form, point>, then evaluates.
  Rational eval(const std::vector<Int>& point) const;

  // The even-class polynomial and odd-class polynomial separately.
  MultiPoly even_part() const;
  MultiPoly odd_part() const;

  bool operator==(const QuasiPolynomial& o) const;

  // Renders coefficients in "(a + b*(-1)^P)" form where P is the parity form,
  // with a = (even+odd)/2 and b = (even-odd)/2; plain rationals when the two
  // classes agree.
  std::string str() const;

 private:
  std::string parity_form_str() const;

  std::vector<std::string> vars_;
  std::vector<Int> parity_form_;
  std::map<Exponents, ClassPair> terms_;
};

Rational quasipoly_eval(const QuasiPolynomial& q, const std::vector<Int>& pt);

// Accumulates contributions of the form scale * (-1)^phase * value where
// phase is an affine polynomial with integer coefficients, and folds them
// into a single period-2 quasipolynomial. All nonconstant phase forms must
// agree modulo 2; inputs where they do not are rejected, since such a sum is
// not representable with one parity form.
class QuasiBuilder {
 public:
  explicit QuasiBuilder(std::vector<std::string> vars);

  void add(const MultiPoly& phase, const MultiPoly& value, const Rational& scale);

  QuasiPolynomial build() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Int> parity_;
  bool have_parity_ = false;
  MultiPoly even_, odd_;
};

}  // namespace liemult
