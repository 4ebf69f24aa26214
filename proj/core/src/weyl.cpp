// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "liemult/errors.hpp"

namespace liemult {
namespace {

int permutation_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Weights of the classical families are half-integral in canonical
// coordinates, so doubling gives exact machine integers.
std::vector<int64_t> scale2(const Weight& v) {
  std::vector<int64_t> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational two_v = v[i] * 2;
    if (two_v.get_den() != 1)
      throw InternalError("weight is not half-integral in canonical coordinates");
    if (!two_v.get_num().fits_slong_p())
      throw InternalError("weight coordinate too large");
    out[i] = two_v.get_num().get_si();
  }
  return out;
}

// Cone membership of diff/2 where diff is a doubled integer vector.
// Checks only the sign conditions; lattice membership is the caller's duty.
bool in_cone_scaled(Family f, const std::vector<int64_t>& diff) {
  const size_t n = diff.size();
  int64_t p = 0;
  switch (f) {
    case Family::A: {
      for (size_t k = 0; k + 1 < n; ++k) {
        p += diff[k];
        if (p < 0) return false;
      }
      return p + diff[n - 1] == 0;
    }
    case Family::B:
    case Family::C: {
      for (size_t k = 0; k < n; ++k) {
        p += diff[k];
        if (p < 0) return false;
      }
      return true;
    }
    case Family::D: {
      for (size_t k = 0; k + 2 < n; ++k) {
        p += diff[k];
        if (p < 0) return false;
      }
      p += diff[n - 2];
      return p >= std::abs(diff[n - 1]);
    }
  }
  return false;
}

Weight halve(const std::vector<int64_t>& diff) {
  Weight out(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    out[i] = Rational(diff[i], 2);
    out[i].canonicalize();  // mpq_class(n, d) keeps n/d unreduced
  }
  return out;
}

void require_dominant(const RootSystem& rs, const Weight& w, const char* name) {
  if (!rs.is_dominant(w))
    throw UsageError(std::string(name) + " must be a dominant weight");
}

}  // namespace

int WeylElement::sign() const {
  int s = permutation_parity(perm);
  for (int8_t e : signs)
    if (e < 0) s = -s;
  return s;
}

Weight apply(const WeylElement& w, const Weight& v) {
  if (v.size() != w.perm.size()) throw InternalError("weyl apply: size mismatch");
  Weight out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[w.perm[i]];
    if (w.signs[i] < 0) out[i] = -out[i];
  }
  return out;
}

void weyl_enumerate(const RootSystem& rs,
                    const std::function<void(const WeylElement&)>& fn) {
  const int n = rs.dim();
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  const bool has_signs = rs.family() != Family::A;
  const bool even_only = rs.family() == Family::D;
  do {
    if (!has_signs) {
      fn(w);
      continue;
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (even_only && (__builtin_popcount(mask) & 1)) continue;
      for (int i = 0; i < n; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
      fn(w);
    }
    std::fill(w.signs.begin(), w.signs.end(), 1);
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

Int weyl_order(const RootSystem& rs) {
  Int fac;
  mpz_fac_ui(fac.get_mpz_t(), rs.dim());
  switch (rs.family()) {
    case Family::A: return fac;
    case Family::B:
    case Family::C: return fac << rs.rank();
    case Family::D: return fac << (rs.rank() - 1);
  }
  throw InternalError("unknown family");
}

std::vector<ValidTerm> valid_elements(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu) {
  require_dominant(rs, lambda, "lambda");
  std::vector<ValidTerm> out;
  if (!rs.in_root_lattice(lambda - mu)) return out;

  const auto t = scale2(lambda + rs.rho());
  const auto m = scale2(mu + rs.rho());
  const int n = rs.dim();
  std::vector<int64_t> diff(n);
  weyl_enumerate(rs, [&](const WeylElement& w) {
    for (int i = 0; i < n; ++i) {
      int64_t x = t[w.perm[i]];
      if (w.signs[i] < 0) x = -x;
      diff[i] = x - m[i];
    }
    if (in_cone_scaled(rs.family(), diff))
      out.push_back(ValidTerm{w.sign(), halve(diff)});
  });
  return out;
}

namespace {

// Inner search state for valid_pairs: fixed outer element contributes the
// doubled vector b; the inner element places the doubled values of mu+rho,
// with signs, position by position.
struct PairSearch {
  Family family = Family::A;
  int n = 0;
  int limit = 0;  // prefix positions that must stay nonnegative
  bool has_signs = false, even_only = false;
  std::vector<int64_t> values;   // doubled mu+rho coordinates
  std::vector<int64_t> b;        // doubled w(lambda+rho)-(nu+2rho)
  std::vector<int64_t> sprefix;  // prefix sums of b
  std::vector<int64_t> maxsum;   // maxsum[c] = sum of the c largest |values|
  std::vector<int64_t> bound;    // bound[c]: see prune rule below
  std::vector<int64_t> chosen;
  std::vector<char> used;
  int outer_sign = 1;
  int flips = 0;
  std::vector<ValidTerm>* out = nullptr;

  void prepare_bounds() {
    sprefix.assign(n + 1, 0);
    for (int k = 0; k < n; ++k) sprefix[k + 1] = sprefix[k] + b[k];
    // After c placements with running sum C, every later mandatory prefix K
    // satisfies p_K <= sprefix[K] + C + maxsum[K-c]; cut when even the best
    // completion is negative.
    bound.assign(n + 1, INT64_MAX);
    for (int c = 0; c <= n; ++c)
      for (int K = c + 1; K <= limit; ++K)
        bound[c] = std::min(bound[c], sprefix[K] + maxsum[K - c]);
  }

  void search(int pos, int64_t csum, int inversions) {
    if (pos == n) {
      if (even_only && (flips & 1)) return;
      if (family == Family::A && sprefix[n] + csum != 0)
        throw InternalError("valid_pairs: traceless argument expected");
      if (family == Family::D) {
        int64_t last = b[n - 1] + chosen[n - 1];
        int64_t p = sprefix[n - 1] + csum - chosen[n - 1];
        if (p < std::abs(last)) return;
      }
      std::vector<int64_t> diff(n);
      for (int i = 0; i < n; ++i) diff[i] = b[i] + chosen[i];
      int s = (inversions % 2 == 0 ? 1 : -1) * (flips % 2 == 0 ? 1 : -1);
      out->push_back(ValidTerm{outer_sign * s, halve(diff)});
      return;
    }
    if (bound[pos] != INT64_MAX && csum + bound[pos] < 0) return;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      int inv = inversions;
      for (int q = 0; q < j; ++q)
        if (!used[q]) ++inv;
      used[j] = 1;
      for (int e = 0; e < (has_signs ? 2 : 1); ++e) {
        int64_t x = e == 0 ? values[j] : -values[j];
        int64_t c2 = csum + x;
        // mandatory prefix check at this depth
        if (pos + 1 <= limit && sprefix[pos + 1] + c2 < 0) continue;
        chosen[pos] = x;
        flips += e;
        search(pos + 1, c2, inv);
        flips -= e;
      }
      used[j] = 0;
    }
  }
};

}  // namespace

std::vector<ValidTerm> valid_pairs(const RootSystem& rs, const Weight& lambda,
                                   const Weight& mu, const Weight& nu) {
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, mu, "mu");
  require_dominant(rs, nu, "nu");
  std::vector<ValidTerm> out;
  if (!rs.in_root_lattice(lambda + mu - nu)) return out;

  const auto t = scale2(lambda + rs.rho());
  const auto target = scale2(nu + rs.rho() + rs.rho());
  const int n = rs.dim();

  PairSearch ps;
  ps.family = rs.family();
  ps.n = n;
  switch (rs.family()) {
    case Family::A: ps.limit = n - 1; break;
    case Family::B:
    case Family::C: ps.limit = n; break;
    case Family::D: ps.limit = n - 1; break;
  }
  ps.has_signs = rs.family() != Family::A;
  ps.even_only = rs.family() == Family::D;
  ps.values = scale2(mu + rs.rho());
  ps.out = &out;
  ps.chosen.assign(n, 0);
  ps.used.assign(n, 0);

  ps.maxsum.assign(n + 1, 0);
  {
    std::vector<int64_t> mags(n);
    for (int i = 0; i < n; ++i)
      mags[i] = ps.has_signs ? std::abs(ps.values[i]) : ps.values[i];
    std::sort(mags.rbegin(), mags.rend());
    for (int c = 1; c <= n; ++c) ps.maxsum[c] = ps.maxsum[c - 1] + mags[c - 1];
  }

  ps.b.resize(n);
  weyl_enumerate(rs, [&](const WeylElement& w) {
    for (int i = 0; i < n; ++i) {
      int64_t x = t[w.perm[i]];
      if (w.signs[i] < 0) x = -x;
      ps.b[i] = x - target[i];
    }
    ps.outer_sign = w.sign();
    ps.prepare_bounds();
    ps.search(0, 0, 0);
  });
  return out;
}

std::vector<ValidTerm> valid_pairs_naive(const RootSystem& rs,
                                         const Weight& lambda, const Weight& mu,
                                         const Weight& nu) {
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, mu, "mu");
  require_dominant(rs, nu, "nu");
  std::vector<ValidTerm> out;
  if (!rs.in_root_lattice(lambda + mu - nu)) return out;

  const Weight lr = lambda + rs.rho();
  const Weight mr = mu + rs.rho();
  const Weight target = nu + rs.rho() + rs.rho();
  weyl_enumerate(rs, [&](const WeylElement& w) {
    const Weight a = apply(w, lr);
    const int ws = w.sign();
    weyl_enumerate(rs, [&](const WeylElement& v) {
      Weight arg = a + apply(v, mr) - target;
      if (rs.in_positive_cone(arg))
        out.push_back(ValidTerm{ws * v.sign(), std::move(arg)});
    });
  });
  return out;
}

}  // namespace liemult
