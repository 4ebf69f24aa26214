// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/multipoly.hpp"

#include <sstream>

#include "liemult/errors.hpp"

namespace liemult {

MultiPoly MultiPoly::constant(std::vector<std::string> vars,
                              const Rational& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.vars_.size())
    throw InternalError("variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int32_t x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

Rational MultiPoly::constant_value() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int32_t x : e) d += x;
    if (d > deg) deg = d;
  }
  return deg;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw InternalError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_universe(const MultiPoly& o) const {
  if (vars_ != o.vars_)
    throw UsageError("mismatched variable universe");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_universe(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_universe(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_universe(o);
  MultiPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, q] : terms_) r.terms_[e] = q * c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(vars_, 1);
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Rational MultiPoly::eval(const QVector& point) const {
  if (point.size() != vars_.size())
    throw UsageError("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int32_t k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << vars_[i];
      if (e[i] > 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << to_string(a);
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << to_string(a) << "*" << mono.str();
    }
  }
  return os.str();
}

}  // namespace liemult
