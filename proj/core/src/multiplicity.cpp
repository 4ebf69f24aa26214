// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/multiplicity.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "liemult/errors.hpp"

namespace liemult {
namespace {

// Sorts v into decreasing order by adjacent swaps, returning the permutation
// sign. Value ties make the sign meaningless; callers reject them afterwards
// through the adjacent-duplicate scan.
int sort_desc_signed(std::vector<Rational>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] > v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  return sign;
}

bool has_adjacent_duplicate(const std::vector<Rational>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return true;
  return false;
}

// Moves xi to the strictly dominant chamber, returning the determinant of the
// Weyl element used, or 0 when xi lies on a wall. Types B and C may flip any
// coordinate (each flip contributes -1), type D only an even number of flips;
// an odd demand is absorbed by leaving the smallest coordinate negative.
int straighten(Family fam, std::vector<Rational>& xi) {
  int sign = 1;
  switch (fam) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      for (auto& q : xi) {
        if (q == 0) return 0;
        if (q < 0) {
          q = -q;
          sign = -sign;
        }
      }
      break;
    case Family::D: {
      int flips = 0;
      for (auto& q : xi) {
        if (q < 0) {
          q = -q;
          ++flips;
        }
      }
      sign = flips % 2 == 0 ? 1 : 2;  // 2 marks a pending compensating flip
      break;
    }
  }
  int parity = sort_desc_signed(xi);
  if (has_adjacent_duplicate(xi)) return 0;
  if (sign == 2) {
    xi.back() = -xi.back();
    sign = 1;
  }
  return sign * parity;
}

std::string join_labels(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i];
  }
  return s;
}

std::vector<Int> dbl_vector(const Weight& w) {
  std::vector<Int> v;
  v.reserve(w.size());
  for (const auto& q : w) v.push_back(to_integer(q * 2));
  return v;
}

Int dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

MultiplicityCalculator::MultiplicityCalculator(const RootSystem& rs,
                                               EngineOptions opts)
    : engine_(rs, std::move(opts)) {}

MultiplicityCalculator::MultiplicityCalculator(Family family, int rank,
                                               EngineOptions opts)
    : engine_(build_root_system(family, rank), std::move(opts)) {}

std::vector<Int> MultiplicityCalculator::weight_key(const Weight& w,
                                                    const char* what) const {
  if (static_cast<int>(w.size()) != rs().dim())
    throw UsageError(std::string(what) + " has wrong dimension");
  std::vector<Int> key;
  key.reserve(w.size());
  for (const auto& q : w) {
    Rational two = q * 2;
    if (!is_integer(two))
      throw UsageError(std::string(what) +
                       " must have integral or half-integral coordinates");
    key.push_back(to_integer(two));
  }
  return key;
}

void MultiplicityCalculator::require_integral_dominant(
    const Weight& lambda) const {
  const RootSystem& R = rs();
  if (!R.is_dominant(lambda))
    throw UsageError("highest weight must be dominant");
  QVector funda = R.from_cano_to_funda(lambda);
  for (const auto& q : funda)
    if (!is_integer(q) || q < 0)
      throw UsageError("highest weight must be dominant and integral");
}

std::vector<WeylElement> MultiplicityCalculator::group_elements() const {
  std::vector<WeylElement> out;
  weyl_enumerate(rs(), [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

Weight MultiplicityCalculator::dominant_representative(const Weight& w) const {
  std::vector<Rational> v = w;
  switch (rs().family()) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      for (auto& q : v)
        if (q < 0) q = -q;
      break;
    case Family::D: {
      int neg = 0;
      for (auto& q : v)
        if (q < 0) {
          q = -q;
          ++neg;
        }
      std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
        return a > b;
      });
      if (neg % 2 != 0) v.back() = -v.back();
      return v;
    }
  }
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
    return a > b;
  });
  return v;
}

Weight MultiplicityCalculator::lowest_weight(const Weight& lambda) const {
  if (!rs().is_dominant(lambda))
    throw UsageError("lowest weight wants a dominant input");
  std::vector<Rational> v = lambda;
  switch (rs().family()) {
    case Family::A:
      std::reverse(v.begin(), v.end());
      return v;
    case Family::B:
    case Family::C:
      for (auto& q : v) q = -q;
      return v;
    case Family::D: {
      int keep = rs().rank() % 2 != 0 ? static_cast<int>(v.size()) - 1 : -1;
      for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (i != keep) v[i] = -v[i];
      return v;
    }
  }
  throw InternalError("bad family tag");
}

std::vector<std::pair<QVector, long>> MultiplicityCalculator::dominant_candidates(
    const Weight& top) const {
  const RootSystem& R = rs();
  const int r = R.rank();
  QVector span = top - lowest_weight(top);
  QVector cq = R.simple_root_coords(span);
  std::vector<long> dims(r);
  double cells = 1;
  for (int i = 0; i < r; ++i) {
    if (!is_integer(cq[i]) || cq[i] < 0)
      throw InternalError("candidate box is not a lattice box");
    Int d = to_integer(cq[i]);
    if (!d.fits_slong_p())
      throw UsageError("weight too large for table enumeration");
    dims[i] = d.get_si();
    cells *= static_cast<double>(dims[i]) + 1;
  }
  if (cells > 8e6) throw UsageError("weight too large for table enumeration");
  const auto& simples = R.simple_roots();
  std::vector<std::pair<QVector, long>> out;
  std::vector<long> c(r, 0);
  while (true) {
    Weight xi = top;
    long h = 0;
    for (int i = 0; i < r; ++i)
      if (c[i] != 0) {
        xi = xi - Rational(c[i]) * simples[i];
        h += c[i];
      }
    if (R.is_dominant(xi)) out.emplace_back(xi, h);
    int k = 0;
    while (k < r && c[k] == dims[k]) {
      c[k] = 0;
      ++k;
    }
    if (k == r) break;
    ++c[k];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const std::pair<QVector, long>& a,
                      const std::pair<QVector, long>& b) {
                     return a.second < b.second;
                   });
  return out;
}

const std::map<QVector, Int, QVectorLess>& MultiplicityCalculator::freudenthal_table(
    const Weight& lambda) {
  auto key = weight_key(lambda, "highest weight");
  auto hit = freud_cache_.find(key);
  if (hit != freud_cache_.end()) return hit->second;
  require_integral_dominant(lambda);

  const RootSystem& R = rs();
  const Weight& rho = R.rho();
  auto cands = dominant_candidates(lambda);

  std::vector<Int> L = dbl_vector(lambda + rho);
  Int L2 = dot_int(L, L);
  std::vector<Int> lam = dbl_vector(lambda);
  Int lam_norm = dot_int(lam, lam);

  std::map<QVector, Int, QVectorLess> table;
  for (const auto& [xi, h] : cands) {
    if (h == 0) {
      table[xi] = 1;
      continue;
    }
    std::vector<Int> M = dbl_vector(xi + rho);
    Int denom = L2 - dot_int(M, M);
    if (denom <= 0)
      throw InternalError("Freudenthal denominator must be positive");
    Int acc = 0;
    for (const auto& alpha : R.positive_roots()) {
      std::vector<Int> A = dbl_vector(alpha);
      std::vector<Int> X = dbl_vector(xi);
      Weight cur = xi;
      while (true) {
        cur = cur + alpha;
        for (size_t i = 0; i < X.size(); ++i) X[i] += A[i];
        // every weight of the module satisfies |mu| <= |lambda|, and the norm
        // grows monotonically along the alpha ray from a dominant start
        if (dot_int(X, X) > lam_norm) break;
        auto f = table.find(dominant_representative(cur));
        if (f == table.end()) continue;
        acc += f->second * dot_int(X, A);
      }
    }
    Int num = 2 * acc;
    if (num == 0) continue;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                denom.get_mpz_t());
    if (rem != 0) throw InternalError("Freudenthal division is not exact");
    if (q < 0) throw InternalError("negative Freudenthal multiplicity");
    if (q > 0) table[xi] = q;
  }
  return freud_cache_.emplace(std::move(key), std::move(table)).first->second;
}

Int MultiplicityCalculator::freudenthal_multiplicity(const Weight& lambda,
                                                     const Weight& mu) {
  const auto& table = freudenthal_table(lambda);
  if (static_cast<int>(mu.size()) != rs().dim())
    throw UsageError("weight has wrong dimension");
  auto it = table.find(dominant_representative(mu));
  return it == table.end() ? Int(0) : it->second;
}

const std::vector<std::pair<Weight, Int>>& MultiplicityCalculator::full_weight_table(
    const Weight& lambda) {
  auto key = weight_key(lambda, "highest weight");
  auto hit = fullwt_cache_.find(key);
  if (hit != fullwt_cache_.end()) return hit->second;
  const auto& table = freudenthal_table(lambda);
  auto group = group_elements();
  std::vector<std::pair<Weight, Int>> out;
  for (const auto& [xi, m] : table) {
    std::set<QVector, QVectorLess> orbit;
    for (const auto& w : group) orbit.insert(liemult::apply(w, xi));
    for (const auto& p : orbit) out.emplace_back(p, m);
  }
  return fullwt_cache_.emplace(std::move(key), std::move(out)).first->second;
}

Int MultiplicityCalculator::weight_support_size(const Weight& lambda) {
  return Int(static_cast<unsigned long>(full_weight_table(lambda).size()));
}

Int MultiplicityCalculator::weyl_dimension(const Weight& lambda) const {
  const RootSystem& R = rs();
  if (!R.is_dominant(lambda))
    throw UsageError("highest weight must be dominant");
  Weight top = lambda + R.rho();
  Rational prod = 1;
  for (const auto& alpha : R.positive_roots())
    prod *= RootSystem::inner(top, alpha) / RootSystem::inner(R.rho(), alpha);
  if (!is_integer(prod)) throw InternalError("Weyl dimension is not integral");
  return to_integer(prod);
}

Int MultiplicityCalculator::weight_multiplicity(const Weight& lambda,
                                                const Weight& mu) {
  require_integral_dominant(lambda);
  if (static_cast<int>(mu.size()) != rs().dim())
    throw UsageError("weight has wrong dimension");
  if (!rs().in_root_lattice(lambda - mu)) return 0;
  Int total = 0;
  for (const auto& term : valid_elements(rs(), lambda, mu))
    total += Int(term.sign) * engine_.kostant_partition(term.argument);
  if (total < 0) throw InternalError("negative weight multiplicity");
  return total;
}

Int MultiplicityCalculator::tensor_coefficient(const Weight& lambda,
                                               const Weight& mu,
                                               const Weight& nu) {
  require_integral_dominant(lambda);
  require_integral_dominant(mu);
  require_integral_dominant(nu);
  Weight diff = lambda + mu - nu;
  // lambda + mu - nu dominates every Weyl-pair argument, so both the direct
  // sum and the coefficient vanish outside the lattice positive cone
  if (!rs().in_root_lattice(diff) || !rs().in_positive_cone(diff)) return 0;
  const Weight* a = &lambda;
  const Weight* b = &mu;
  if (QVectorLess{}(*b, *a)) std::swap(a, b);
  std::vector<Int> key = weight_key(*a, "weight");
  for (auto& x : weight_key(*b, "weight")) key.push_back(x);
  for (auto& x : weight_key(nu, "weight")) key.push_back(x);
  auto hit = tensor_cache_.find(key);
  if (hit != tensor_cache_.end()) return hit->second;
  Int total = 0;
  for (const auto& term : valid_pairs(rs(), *a, *b, nu))
    total += Int(term.sign) * engine_.kostant_partition(term.argument);
  if (total < 0) throw InternalError("negative tensor coefficient");
  tensor_cache_.emplace(std::move(key), total);
  return total;
}

std::map<QVector, Int, QVectorLess> MultiplicityCalculator::tensor_decompose(
    const Weight& lambda, const Weight& mu) {
  require_integral_dominant(lambda);
  require_integral_dominant(mu);
  Weight big = lambda;
  Weight small = mu;
  if (weyl_dimension(big) < weyl_dimension(small)) std::swap(big, small);
  const auto& wts = full_weight_table(small);
  const Weight& rho = rs().rho();
  const Family fam = rs().family();
  Weight base = big + rho;
  std::map<QVector, Int, QVectorLess> out;
  for (const auto& [tau, m] : wts) {
    std::vector<Rational> xi = base + tau;
    int sgn = straighten(fam, xi);
    if (sgn == 0) continue;
    out[QVector(xi) - rho] += Int(sgn) * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
    } else if (it->second < 0) {
      throw InternalError("straightening produced a negative coefficient");
    } else {
      ++it;
    }
  }
  return out;
}

std::map<QVector, Int, QVectorLess> MultiplicityCalculator::tensor_decompose_peel(
    const Weight& lambda, const Weight& mu) {
  require_integral_dominant(lambda);
  require_integral_dominant(mu);
  Weight big = lambda;
  Weight small = mu;
  if (weyl_dimension(big) < weyl_dimension(small)) std::swap(big, small);
  const auto& small_wts = full_weight_table(small);
  const auto& big_table = freudenthal_table(big);

  auto cands = dominant_candidates(lambda + mu);
  // the product character on the dominant candidates
  std::map<QVector, Int, QVectorLess> remainder;
  for (const auto& [xi, h] : cands) {
    Int v = 0;
    for (const auto& [tau, m] : small_wts) {
      auto f = big_table.find(dominant_representative(xi - tau));
      if (f != big_table.end()) v += m * f->second;
    }
    if (v != 0) remainder[xi] = v;
  }
  // peel off highest weights, nearest to the top first
  std::map<QVector, Int, QVectorLess> out;
  for (const auto& [xi, h] : cands) {
    auto it = remainder.find(xi);
    if (it == remainder.end() || it->second == 0) continue;
    Int c = it->second;
    if (c < 0)
      throw InternalError("character peel-off extracted a negative coefficient");
    out[xi] = c;
    for (const auto& [dom, m] : freudenthal_table(xi)) remainder[dom] -= c * m;
  }
  for (const auto& [xi, v] : remainder)
    if (v != 0)
      throw InternalError("character peel-off left a nonzero remainder");
  return out;
}

Int MultiplicityCalculator::tensor_oracle(const Weight& lambda,
                                          const Weight& mu, const Weight& nu) {
  require_integral_dominant(nu);
  const Weight* a = &lambda;
  const Weight* b = &mu;
  if (QVectorLess{}(*b, *a)) std::swap(a, b);
  std::vector<Int> key = weight_key(*a, "weight");
  for (auto& x : weight_key(*b, "weight")) key.push_back(x);
  auto hit = oracle_cache_.find(key);
  if (hit == oracle_cache_.end()) {
    // the literal peel-off is quadratic in the module sizes; fall back to
    // straightening beyond a size threshold
    Int budget = weyl_dimension(*a) * weyl_dimension(*b);
    auto dec = budget <= 2000000 ? tensor_decompose_peel(*a, *b)
                                 : tensor_decompose(*a, *b);
    hit = oracle_cache_.emplace(std::move(key), std::move(dec)).first;
  }
  auto it = hit->second.find(nu);
  return it == hit->second.end() ? Int(0) : it->second;
}

FormalResult MultiplicityCalculator::multiplicity_quasipoly(
    const Weight& lambda, const Weight& mu) {
  require_integral_dominant(lambda);
  const RootSystem& R = rs();
  const int d = R.dim();
  std::vector<std::string> vars;
  for (int i = 1; i <= d; ++i) vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= d; ++i) vars.push_back("y" + std::to_string(i));
  QuasiBuilder qb(vars);
  std::vector<std::string> labels;
  std::vector<std::string> chambers;
  if (R.in_root_lattice(lambda - mu)) {
    const Weight& rho = R.rho();
    int idx = -1;
    weyl_enumerate(R, [&](const WeylElement& w) {
      ++idx;
      Weight base = liemult::apply(w, lambda + rho) - mu - rho;
      if (!R.in_positive_cone(base)) return;
      std::vector<MultiPoly> forms;
      for (int i = 0; i < d; ++i) {
        Rational s(static_cast<long>(w.signs[i]));
        MultiPoly f = MultiPoly::variable(vars, w.perm[i]) * s;
        f = f - MultiPoly::variable(vars, d + i);
        f = f + MultiPoly::constant(vars, s * rho[w.perm[i]] - rho[i]);
        forms.push_back(std::move(f));
      }
      FormalEvaluation fe = engine_.formal_terms(forms, base);
      for (const auto& t : fe.terms)
        qb.add(t.phase, t.value, Rational(w.sign()));
      labels.push_back("w" + std::to_string(idx));
      chambers.push_back(fe.chamber);
    });
  }
  return FormalResult{qb.build(), join_labels(labels), std::move(chambers)};
}

FormalResult MultiplicityCalculator::tensor_quasipoly(const Weight& lambda,
                                                      const Weight& mu,
                                                      const Weight& nu) {
  require_integral_dominant(lambda);
  require_integral_dominant(mu);
  require_integral_dominant(nu);
  const RootSystem& R = rs();
  const int d = R.dim();
  std::vector<std::string> vars;
  for (int i = 1; i <= d; ++i) vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= d; ++i) vars.push_back("y" + std::to_string(i));
  for (int i = 1; i <= d; ++i) vars.push_back("z" + std::to_string(i));
  QuasiBuilder qb(vars);
  std::vector<std::string> labels;
  std::vector<std::string> chambers;
  if (R.in_root_lattice(lambda + mu - nu)) {
    const Weight& rho = R.rho();
    auto group = group_elements();
    for (size_t i = 0; i < group.size(); ++i) {
      const WeylElement& w = group[i];
      Weight left = liemult::apply(w, lambda + rho);
      for (size_t j = 0; j < group.size(); ++j) {
        const WeylElement& u = group[j];
        Weight base = left + liemult::apply(u, mu + rho) - nu - rho - rho;
        if (!R.in_positive_cone(base)) continue;
        std::vector<MultiPoly> forms;
        for (int k = 0; k < d; ++k) {
          Rational sw(static_cast<long>(w.signs[k]));
          Rational su(static_cast<long>(u.signs[k]));
          MultiPoly f = MultiPoly::variable(vars, w.perm[k]) * sw;
          f = f + MultiPoly::variable(vars, d + u.perm[k]) * su;
          f = f - MultiPoly::variable(vars, 2 * d + k);
          f = f + MultiPoly::constant(
                      vars, sw * rho[w.perm[k]] + su * rho[u.perm[k]] -
                                rho[k] - rho[k]);
          forms.push_back(std::move(f));
        }
        FormalEvaluation fe = engine_.formal_terms(forms, base);
        for (const auto& t : fe.terms)
          qb.add(t.phase, t.value, Rational(w.sign() * u.sign()));
        labels.push_back("w" + std::to_string(i) + "*w" + std::to_string(j));
        chambers.push_back(fe.chamber);
      }
    }
  }
  return FormalResult{qb.build(), join_labels(labels), std::move(chambers)};
}

FormalResult MultiplicityCalculator::multiplicity_stretch(const Weight& lambda,
                                                          const Weight& mu) {
  require_integral_dominant(lambda);
  if (static_cast<int>(mu.size()) != rs().dim())
    throw UsageError("weight has wrong dimension");
  if (!rs().in_root_lattice(lambda - mu))
    throw UsageError("stretch requires lambda - mu in the root lattice");
  const RootSystem& R = rs();
  const int d = R.dim();
  const Weight& rho = R.rho();
  std::vector<std::string> vars{"t"};
  QuasiBuilder qb(vars);
  std::vector<std::string> labels;
  std::vector<std::string> chambers;
  int idx = -1;
  weyl_enumerate(R, [&](const WeylElement& w) {
    ++idx;
    Weight A = liemult::apply(w, lambda) - mu;
    Weight B = liemult::apply(w, rho) - rho;
    std::vector<MultiPoly> forms;
    for (int i = 0; i < d; ++i)
      forms.push_back(MultiPoly::variable(vars, 0) * A[i] +
                      MultiPoly::constant(vars, B[i]));
    auto fe = engine_.formal_terms_on_ray(forms, A, B);
    if (!fe) return;
    for (const auto& t : fe->terms) qb.add(t.phase, t.value, Rational(w.sign()));
    labels.push_back("w" + std::to_string(idx));
    chambers.push_back(fe->chamber);
  });
  return FormalResult{qb.build(), join_labels(labels), std::move(chambers)};
}

FormalResult MultiplicityCalculator::tensor_stretch(const Weight& lambda,
                                                    const Weight& mu,
                                                    const Weight& nu) {
  require_integral_dominant(lambda);
  require_integral_dominant(mu);
  require_integral_dominant(nu);
  if (!rs().in_root_lattice(lambda + mu - nu))
    throw UsageError("stretch requires lambda + mu - nu in the root lattice");
  const RootSystem& R = rs();
  const int d = R.dim();
  const Weight& rho = R.rho();
  std::vector<std::string> vars{"t"};
  QuasiBuilder qb(vars);
  std::vector<std::string> labels;
  std::vector<std::string> chambers;
  auto group = group_elements();
  for (size_t i = 0; i < group.size(); ++i) {
    Weight wl = liemult::apply(group[i], lambda);
    Weight wr = liemult::apply(group[i], rho);
    for (size_t j = 0; j < group.size(); ++j) {
      Weight A = wl + liemult::apply(group[j], mu) - nu;
      Weight B = wr + liemult::apply(group[j], rho) - rho - rho;
      std::vector<MultiPoly> forms;
      for (int k = 0; k < d; ++k)
        forms.push_back(MultiPoly::variable(vars, 0) * A[k] +
                        MultiPoly::constant(vars, B[k]));
      auto fe = engine_.formal_terms_on_ray(forms, A, B);
      if (!fe) continue;
      Rational scale(group[i].sign() * group[j].sign());
      for (const auto& t : fe->terms) qb.add(t.phase, t.value, scale);
      labels.push_back("w" + std::to_string(i) + "*w" + std::to_string(j));
      chambers.push_back(fe->chamber);
    }
  }
  return FormalResult{qb.build(), join_labels(labels), std::move(chambers)};
}

}  // namespace liemult
