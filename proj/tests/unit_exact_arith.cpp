// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "liemult/errors.hpp"
#include "liemult/laurent.hpp"
#include "liemult/multipoly.hpp"
#include "liemult/quasipoly.hpp"
#include "liemult/rational.hpp"

using namespace liemult;

namespace {

// Scalar coefficient polynomial over the empty variable universe.
MultiPoly sc(const Rational& c) { return MultiPoly::constant({}, c); }

LaurentSeries scalar_series(int lowest, std::vector<Rational> cs, int trunc) {
  std::vector<MultiPoly> coeffs;
  for (const Rational& c : cs) coeffs.push_back(sc(c));
  // zero-pad the tail up to the truncation window
  while (static_cast<int>(coeffs.size()) < trunc - lowest)
    coeffs.push_back(MultiPoly(std::vector<std::string>{}));
  return LaurentSeries::make("z", lowest, std::move(coeffs), trunc);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("35/2") == Rational(35, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0") == 0);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);

  QVector v = parse_qvector("1,-2,35/2");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Rational(35, 2));
  CHECK(to_string(v) == "1,-2,35/2");
}

TEST_CASE("rational helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(pow_rational(Rational(-1, 2), 3) == Rational(-1, 8));
  CHECK(pow_rational(Rational(7), 0) == 1);
  Rational two(6, 3);
  two.canonicalize();  // raw mpq construction does not reduce
  CHECK(is_integer(two));
  CHECK(!is_integer(Rational(1, 2)));
  CHECK(to_integer(two) == 2);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), InternalError);
}

TEST_CASE("qvector arithmetic") {
  QVector a{Rational(1), Rational(2)};
  QVector b{Rational(3), Rational(-1)};
  QVector s = a + b;
  CHECK(s[0] == 4);
  CHECK(s[1] == 1);
  QVector d = a - b;
  CHECK(d[0] == -2);
  QVector t = Rational(3) * a;
  CHECK(t[1] == 6);
  CHECK(dot(a, b) == 1);
  CHECK(!is_zero(a));
  CHECK(is_zero(a - a));
}

TEST_CASE("geometric series inverse") {
  // 1/(1-z) = 1 + z + z^2 + ...
  LaurentSeries inv = series_invert(scalar_series(0, {1, -1}, 4));
  CHECK(inv.lowest() == 0);
  for (int k = 0; k <= 3; ++k) CHECK(inv.coeff(k) == sc(1));
}

TEST_CASE("inverse of 2+z") {
  LaurentSeries inv = series_invert(scalar_series(0, {2, 1}, 3));
  CHECK(inv.coeff(0) == sc(Rational(1, 2)));
  CHECK(inv.coeff(1) == sc(Rational(-1, 4)));
  CHECK(inv.coeff(2) == sc(Rational(1, 8)));
}

TEST_CASE("residue extraction") {
  // z^-2 + 3 z^-1 + 5 has residue 3.
  LaurentSeries s = scalar_series(-2, {1, 3, 5}, 1);
  CHECK(residue_coeff(s) == sc(3));
  CHECK(residue_coeff(scalar_series(0, {4, 4}, 2)).is_zero());
}

TEST_CASE("laurent multiplication with negative exponents") {
  // (z^-1 + 1)(z - 1) = z - z^-1.
  LaurentSeries a = scalar_series(-1, {1, 1}, 3);
  LaurentSeries b = scalar_series(0, {-1, 1}, 3);
  LaurentSeries p = series_mul(a, b);
  CHECK(p.coeff(-1) == sc(-1));
  CHECK(p.coeff(0).is_zero());
  CHECK(p.coeff(1) == sc(1));
}

TEST_CASE("series multiplication truncates to the reliable window") {
  LaurentSeries a = scalar_series(0, {1, 1}, 2);
  LaurentSeries b = scalar_series(-1, {1}, 3);
  LaurentSeries p = series_mul(a, b);
  CHECK(p.trunc() == 1);  // min(2 + -1, 3 + 0)
  CHECK(p.lowest() == -1);
}

TEST_CASE("inverting against a polynomial leading coefficient is rejected") {
  std::vector<std::string> vars{"a"};
  std::vector<MultiPoly> coeffs{MultiPoly::variable(vars, 0), MultiPoly(vars)};
  LaurentSeries s = LaurentSeries::make("z", 0, std::move(coeffs), 2);
  CHECK_THROWS_AS(series_invert(s), InternalError);
}

TEST_CASE("inverse really is a multiplicative inverse") {
  LaurentSeries s = scalar_series(-1, {2, -3, 5, 1}, 3);
  LaurentSeries p = series_mul(s, series_invert(s));
  CHECK(p.coeff(0) == sc(1));
  for (int k = 1; k < p.trunc(); ++k) CHECK(p.coeff(k).is_zero());
}

TEST_CASE("multipoly ring identities on random samples") {
  std::vector<std::string> vars{"u", "v"};
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> cd(-4, 4), ed(0, 3);
  auto rand_poly = [&]() {
    MultiPoly p = MultiPoly::constant(vars, Rational(cd(rng)));
    for (int t = 0; t < 3; ++t) {
      MultiPoly::Exponents e{ed(rng), ed(rng)};
      p.add_term(e, Rational(cd(rng)));
    }
    return p;
  };
  for (int iter = 0; iter < 20; ++iter) {
    MultiPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == MultiPoly::constant(vars, Rational(0)));
    QVector pt{Rational(2), Rational(-3, 2)};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("multipoly powers and inspection") {
  std::vector<std::string> vars{"x"};
  MultiPoly x = MultiPoly::variable(vars, 0);
  MultiPoly p = x + MultiPoly::constant(vars, Rational(1));
  CHECK(p.pow(3).eval({Rational(3)}) == 64);
  CHECK(p.pow(0) == MultiPoly::constant(vars, Rational(1)));
  CHECK(p.total_degree() == 1);
  CHECK(!p.is_constant());
  CHECK(p.pow(0).is_constant());
  CHECK(p.pow(0).constant_value() == 1);
  CHECK(MultiPoly(vars).total_degree() == -1);
}

TEST_CASE("quasipolynomial evaluation respects parity") {
  // 1 + t on even t, 2t on odd t, parity decided by t itself.
  QuasiPolynomial q({"t"}, {Int(1)});
  q.add_term({0}, Rational(1), Rational(0));
  q.add_term({1}, Rational(1), Rational(2));
  CHECK(quasipoly_eval(q, {Int(4)}) == 5);
  CHECK(quasipoly_eval(q, {Int(7)}) == 14);
  CHECK(quasipoly_eval(q, {Int(0)}) == 1);
}

TEST_CASE("quasipolynomial parts and sum") {
  QuasiPolynomial a({"t"}, {Int(1)});
  a.add_term({2}, Rational(1), Rational(1));
  QuasiPolynomial b({"t"}, {Int(1)});
  b.add_term({2}, Rational(-1), Rational(1));
  QuasiPolynomial s = a + b;
  CHECK(quasipoly_eval(s, {Int(6)}) == 0);
  CHECK(quasipoly_eval(s, {Int(5)}) == 50);
  CHECK(s.even_part().is_zero());
  CHECK(!s.odd_part().is_zero());
}

TEST_CASE("quasipolynomial rendering") {
  QuasiPolynomial q({"t"}, {Int(1)});
  q.add_term({1}, Rational(3), Rational(1));
  std::string s = q.str();
  CHECK(s.find("(-1)^(t)") != std::string::npos);
  QuasiPolynomial plain({"t"}, {Int(1)});
  plain.add_term({1}, Rational(3), Rational(3));
  CHECK(plain.str() == "3*t");
}

TEST_CASE("quasibuilder folds phases with a common parity form") {
  std::vector<std::string> vars{"t"};
  MultiPoly t = MultiPoly::variable(vars, 0);
  MultiPoly one = MultiPoly::constant(vars, Rational(1));
  QuasiBuilder qb(vars);
  qb.add(t, one, Rational(1));               // (-1)^t
  qb.add(t + one + one, t, Rational(2));     // same parity as t
  QuasiPolynomial q = qb.build();
  CHECK(quasipoly_eval(q, {Int(2)}) == 5);   // 1 + 2*2
  CHECK(quasipoly_eval(q, {Int(3)}) == -7);  // -1 - 2*3
}

TEST_CASE("quasibuilder rejects incompatible parity forms") {
  std::vector<std::string> vars{"s", "t"};
  MultiPoly s = MultiPoly::variable(vars, 0);
  MultiPoly t = MultiPoly::variable(vars, 1);
  MultiPoly one = MultiPoly::constant(vars, Rational(1));
  QuasiBuilder qb(vars);
  qb.add(s, one, Rational(1));
  CHECK_THROWS_AS(qb.add(t, one, Rational(1)), UsageError);
}
