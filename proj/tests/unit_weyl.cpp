// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "liemult/root_system.hpp"
#include "liemult/weyl.hpp"

using namespace liemult;

namespace {

QVector qv(std::vector<int> v) {
  QVector out;
  for (int x : v) out.push_back(Rational(x));
  return out;
}

// Multiset of (sign, argument) pairs for order-insensitive comparison.
std::multiset<std::pair<int, std::vector<std::string>>> term_key(
    const std::vector<ValidTerm>& terms) {
  std::multiset<std::pair<int, std::vector<std::string>>> out;
  for (const ValidTerm& t : terms) {
    std::vector<std::string> arg;
    for (const Rational& c : t.argument) arg.push_back(to_string(c));
    out.emplace(t.sign, std::move(arg));
  }
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(weyl_order(build_root_system(Family::A, 2)) == 6);
  CHECK(weyl_order(build_root_system(Family::A, 3)) == 24);
  CHECK(weyl_order(build_root_system(Family::B, 2)) == 8);
  CHECK(weyl_order(build_root_system(Family::B, 3)) == 48);
  CHECK(weyl_order(build_root_system(Family::C, 3)) == 48);
  CHECK(weyl_order(build_root_system(Family::D, 4)) == 192);
}

TEST_CASE("enumeration streams each element once") {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
    int rank = fam == Family::D ? 3 : 2;
    RootSystem rs = build_root_system(fam, rank);
    std::set<std::pair<std::vector<int>, std::vector<int8_t>>> seen;
    Int signsum = 0;
    bool identity_seen = false;
    weyl_enumerate(rs, [&](const WeylElement& w) {
      CHECK(seen.emplace(w.perm, w.signs).second);
      CHECK((w.sign() == 1 || w.sign() == -1));
      signsum += w.sign();
      bool ident = true;
      int minuses = 0;
      for (size_t i = 0; i < w.perm.size(); ++i) {
        if (w.perm[i] != static_cast<int>(i) || w.signs[i] != 1) ident = false;
        if (w.signs[i] == -1) ++minuses;
      }
      if (ident) identity_seen = true;
      if (fam == Family::A) CHECK(minuses == 0);
      if (fam == Family::D) CHECK(minuses % 2 == 0);
    });
    CHECK(Int(static_cast<long>(seen.size())) == weyl_order(rs));
    CHECK(identity_seen);
    CHECK(signsum == 0);  // equally many even and odd elements
  }
}

TEST_CASE("action preserves the root system and fixes rho only at the identity") {
  RootSystem rs = build_root_system(Family::B, 3);
  std::set<QVector, QVectorLess> roots;
  for (const Weight& a : rs.positive_roots()) {
    roots.insert(a);
    roots.insert(Rational(-1) * a);
  }
  int rho_fixers = 0;
  weyl_enumerate(rs, [&](const WeylElement& w) {
    for (const Weight& a : rs.positive_roots())
      CHECK(roots.count(liemult::apply(w, a)) == 1);
    if (liemult::apply(w, rs.rho()) == rs.rho()) ++rho_fixers;
  });
  CHECK(rho_fixers == 1);
}

TEST_CASE("signs multiply along orbit sums") {
  // Sum of w(rho) over the group vanishes: pair each w with its negative-sign
  // partner under the longest element.
  RootSystem rs = build_root_system(Family::C, 2);
  Weight total(rs.dim(), Rational(0));
  weyl_enumerate(rs,
                 [&](const WeylElement& w) { total = total + liemult::apply(w, rs.rho()); });
  CHECK(is_zero(total));
}

TEST_CASE("rank one straightening keeps exactly the identity") {
  RootSystem rs = build_root_system(Family::A, 1);
  std::vector<ValidTerm> val = valid_elements(rs, qv({1, 0}), qv({0, 1}));
  REQUIRE(val.size() == 1);
  CHECK(val[0].sign == 1);
  CHECK(val[0].argument == qv({1, -1}));
}

TEST_CASE("valid elements land in the positive cone and need lattice membership") {
  RootSystem rs = build_root_system(Family::B, 2);
  std::vector<ValidTerm> val = valid_elements(rs, qv({2, 1}), qv({1, 0}));
  CHECK(!val.empty());
  for (const ValidTerm& t : val) CHECK(rs.in_positive_cone(t.argument));
  // mu with lambda - mu outside the root lattice of A2: empty, no enumeration.
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(valid_elements(a2, qv({1, 1, 0}), qv({1, 0, 0})).empty());
}

TEST_CASE("rank one tensor pairs") {
  RootSystem rs = build_root_system(Family::A, 1);
  std::vector<ValidTerm> val =
      valid_pairs(rs, qv({1, 0}), qv({1, 0}), qv({1, 1}));
  REQUIRE(val.size() == 1);
  CHECK(val[0].sign == 1);
  CHECK(val[0].argument == qv({1, -1}));
}

TEST_CASE("branch and bound pair scan matches the double scan") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> fd(0, 2);
  for (Family fam : {Family::A, Family::B, Family::C}) {
    RootSystem rs = build_root_system(fam, 2);
    for (int iter = 0; iter < 6; ++iter) {
      QVector lf{Rational(fd(rng)), Rational(fd(rng))};
      QVector mf{Rational(fd(rng)), Rational(fd(rng))};
      QVector nf{Rational(fd(rng)), Rational(fd(rng))};
      Weight lambda = rs.from_funda_to_cano(lf);
      Weight mu = rs.from_funda_to_cano(mf);
      Weight nu = rs.from_funda_to_cano(nf);
      CHECK(term_key(valid_pairs(rs, lambda, mu, nu)) ==
            term_key(valid_pairs_naive(rs, lambda, mu, nu)));
    }
  }
  RootSystem d4 = build_root_system(Family::D, 4);
  Weight l = d4.from_funda_to_cano(qv({1, 0, 1, 0}));
  Weight m = d4.from_funda_to_cano(qv({0, 1, 0, 1}));
  Weight n = d4.from_funda_to_cano(qv({1, 1, 1, 1}));
  CHECK(term_key(valid_pairs(d4, l, m, n)) ==
        term_key(valid_pairs_naive(d4, l, m, n)));
}
