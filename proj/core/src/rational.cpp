// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/rational.hpp"

#include <sstream>

#include "liemult/errors.hpp"

namespace liemult {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Rational parse_rational(const std::string& s) {
  auto bad = [&] { throw UsageError("not a rational number: '" + s + "'"); };
  if (s.empty()) bad();
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      bad();
  }
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = 0;
    if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  Rational q;
  try {
    q = Rational(num + "/" + den);
  } catch (const std::invalid_argument&) {
    bad();
  }
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Int to_integer(const Rational& q) {
  if (!is_integer(q))
    throw InternalError("expected an integer, got " + to_string(q));
  return q.get_num();
}

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational r = 1;
  Rational b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << to_string(v[i]);
  }
  return os.str();
}

QVector parse_qvector(const std::string& s) {
  QVector v;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) v.push_back(parse_rational(cur));
  if (v.empty()) throw UsageError("empty weight vector");
  return v;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch in +");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch in -");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator*(const Rational& c, const QVector& a) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch in dot");
  Rational r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero(const QVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace liemult
