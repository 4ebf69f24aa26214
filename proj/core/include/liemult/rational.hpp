// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace liemult {

// Exact scalars. mpq_class is always canonical: reduced, denominator > 0,
// zero stored as 0/1, which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

// Accepts "p", "-p", "p/q" with optional sign; throws UsageError otherwise.
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& q);

// q must be integral; throws InternalError if not.
Int to_integer(const Rational& q);

Int factorial(unsigned n);

// Exact binomial 2^k helpers used by series tables.
Rational pow_rational(const Rational& base, unsigned exp);

using QVector = std::vector<Rational>;

std::string to_string(const QVector& v);  // comma separated
QVector parse_qvector(const std::string& s);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& c, const QVector& a);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& a);

}  // namespace liemult
