// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/quasipoly.hpp"

#include <sstream>

#include "liemult/errors.hpp"

namespace liemult {

QuasiPolynomial::QuasiPolynomial(std::vector<std::string> vars,
                                 std::vector<Int> parity_form)
    : vars_(std::move(vars)), parity_form_(std::move(parity_form)) {
  if (parity_form_.size() != vars_.size())
    throw InternalError("parity form arity != variable count");
}

void QuasiPolynomial::add_term(const Exponents& e, const Rational& even,
                               const Rational& odd) {
  if (e.size() != vars_.size())
    throw InternalError("exponent arity mismatch");
  auto [it, inserted] = terms_.emplace(e, ClassPair{even, odd});
  if (!inserted) {
    it->second.first += even;
    it->second.second += odd;
  }
  if (it->second.first == 0 && it->second.second == 0) terms_.erase(it);
}

void QuasiPolynomial::accumulate(const MultiPoly& poly, bool to_even,
                                 bool to_odd) {
  if (poly.vars() != vars_)
    throw InternalError("quasipolynomial universe mismatch");
  for (const auto& [e, c] : poly.terms())
    add_term(e, to_even ? c : Rational(0), to_odd ? c : Rational(0));
}

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& o) const {
  if (vars_ != o.vars_ || parity_form_ != o.parity_form_)
    throw InternalError("quasipolynomial shape mismatch in +");
  QuasiPolynomial r = *this;
  for (const auto& [e, pair] : o.terms_)
    r.add_term(e, pair.first, pair.second);
  return r;
}

Rational QuasiPolynomial::eval(const std::vector<Int>& point) const {
  if (point.size() != vars_.size())
    throw UsageError("evaluation point arity mismatch");
  Int p = 0;
  for (size_t i = 0; i < point.size(); ++i) p += parity_form_[i] * point[i];
  bool odd = mpz_odd_p(p.get_mpz_t()) != 0;
  Rational sum = 0;
  for (const auto& [e, pair] : terms_) {
    Rational t = odd ? pair.second : pair.first;
    if (t == 0) continue;
    for (size_t i = 0; i < e.size(); ++i)
      for (int32_t k = 0; k < e[i]; ++k) t *= Rational(point[i]);
    sum += t;
  }
  return sum;
}

MultiPoly QuasiPolynomial::even_part() const {
  MultiPoly p(vars_);
  for (const auto& [e, pair] : terms_) p.add_term(e, pair.first);
  return p;
}

MultiPoly QuasiPolynomial::odd_part() const {
  MultiPoly p(vars_);
  for (const auto& [e, pair] : terms_) p.add_term(e, pair.second);
  return p;
}

bool QuasiPolynomial::operator==(const QuasiPolynomial& o) const {
  // Parity forms matter only mod 2 and only where the classes differ.
  if (vars_ != o.vars_ || terms_ != o.terms_) return false;
  bool classes_differ = false;
  for (const auto& [e, pair] : terms_)
    if (pair.first != pair.second) classes_differ = true;
  if (!classes_differ) return true;
  for (size_t i = 0; i < parity_form_.size(); ++i) {
    Int d = parity_form_[i] - o.parity_form_[i];
    if (mpz_odd_p(d.get_mpz_t())) return false;
  }
  return true;
}

std::string QuasiPolynomial::parity_form_str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < parity_form_.size(); ++i) {
    if (parity_form_[i] == 0) continue;
    if (!first) os << "+";
    if (parity_form_[i] != 1) os << to_string(parity_form_[i]) << "*";
    os << vars_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string QuasiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string pf = parity_form_str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, pair] : terms_) {
    Rational a = (pair.first + pair.second) / 2;
    Rational b = (pair.first - pair.second) / 2;
    std::ostringstream mono;
    bool any_var = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << vars_[i];
      if (e[i] > 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!first) os << " + ";
    first = false;
    std::ostringstream coeff;
    if (b == 0) {
      coeff << to_string(a);
      if (any_var && a != 1) os << coeff.str() << "*";
      if (any_var && a == 1) {
        // bare monomial
      }
      if (!any_var) os << coeff.str();
    } else {
      coeff << "(" << to_string(a);
      if (b > 0)
        coeff << " + " << to_string(b);
      else
        coeff << " - " << to_string(-b);
      coeff << "*(-1)^(" << pf << "))";
      os << coeff.str();
      if (any_var) os << "*";
    }
    if (any_var) os << mono.str();
  }
  return os.str();
}

Rational quasipoly_eval(const QuasiPolynomial& q, const std::vector<Int>& pt) {
  return q.eval(pt);
}

QuasiBuilder::QuasiBuilder(std::vector<std::string> vars)
    : vars_(std::move(vars)), even_(vars_), odd_(vars_) {}

void QuasiBuilder::add(const MultiPoly& phase, const MultiPoly& value,
                       const Rational& scale) {
  const size_t n = vars_.size();
  std::vector<Int> kappa(n, 0);
  Int off = 0;
  for (const auto& [e, c] : phase.terms()) {
    int deg = 0;
    size_t var = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i] > 0) var = i;
    }
    if (deg > 1) throw InternalError("parity phase is not affine");
    if (c.get_den() != 1)
      throw UsageError(
          "parity of a contributing character is not an integer form in these "
          "variables; quasipolynomial not representable with period 2");
    Int coef = c.get_num();
    mpz_mod_ui(coef.get_mpz_t(), coef.get_mpz_t(), 2);
    if (deg == 0)
      off = coef;
    else
      kappa[var] = coef;
  }
  bool nonconstant = false;
  for (const Int& k : kappa)
    if (k != 0) nonconstant = true;
  if (nonconstant) {
    if (!have_parity_) {
      parity_ = kappa;
      have_parity_ = true;
    } else if (parity_ != kappa) {
      throw UsageError(
          "contributions carry incompatible parity forms; quasipolynomial not "
          "representable with period 2");
    }
  }
  MultiPoly scaled = value * scale;
  if (off != 0) scaled = scaled * Rational(-1);
  if (nonconstant) {
    // even class: form is even, so the phase sign is (-1)^off; odd: flipped
    even_ = even_ + scaled;
    odd_ = odd_ - scaled;
  } else {
    even_ = even_ + scaled;
    odd_ = odd_ + scaled;
  }
}

QuasiPolynomial QuasiBuilder::build() const {
  std::vector<Int> pf = have_parity_ ? parity_ : std::vector<Int>(vars_.size(), 0);
  QuasiPolynomial q(vars_, std::move(pf));
  q.accumulate(even_, true, false);
  q.accumulate(odd_, false, true);
  return q;
}

}  // namespace liemult
