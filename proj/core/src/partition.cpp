// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
//
// Residue engine for the vector partition function of a positive root
// system. Evaluation runs over the nested sets selected by the chamber of
// the argument; per nested set and torus character, the product of the
// denominator factor series is expanded once into a "box": the map from the
// exponent vector the exponential numerator must supply to its rational
// coefficient. Boxes are independent of the argument and of the chamber, so
// they are cached aggressively.

#include "liemult/partition.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "liemult/errors.hpp"
#include "linalg.hpp"

namespace liemult {
namespace {

// b with a*b = 1 as power series, a[0] != 0.
std::vector<Rational> invert_series(const std::vector<Rational>& a) {
  std::vector<Rational> b(a.size());
  b[0] = Rational(1) / a[0];
  for (size_t n = 1; n < a.size(); ++n) {
    Rational s = 0;
    for (size_t j = 1; j <= n; ++j) s += a[j] * b[n - j];
    b[n] = -s * b[0];
  }
  return b;
}

// Coefficients of t/(1 - exp(-t)) = 1 + t/2 + t^2/12 - t^4/720 + ...
std::vector<Rational> pole_series(int count) {
  std::vector<Rational> d(count);
  for (int m = 0; m < count; ++m) {
    d[m] = Rational(1) / Rational(factorial((unsigned)m + 1));
    if (m % 2) d[m] = -d[m];
  }
  return invert_series(d);
}

// Coefficients of 1/(1 + exp(-t)) = 1/2 + t/4 - t^3/48 + ...
std::vector<Rational> jump_series(int count) {
  std::vector<Rational> d(count);
  for (int m = 0; m < count; ++m) {
    d[m] = Rational(1) / Rational(factorial((unsigned)m));
    if (m % 2) d[m] = -d[m];
  }
  d[0] = 2;
  return invert_series(d);
}

Rational multinomial(int total, const std::vector<int>& parts) {
  Rational m(factorial((unsigned)total));
  for (int p : parts)
    if (p > 1) m /= Rational(factorial((unsigned)p));
  return m;
}

// All vectors 0 <= b <= caps componentwise with sum b <= smax; fn(b, sum b).
template <class Fn>
void enumerate_boxed(const std::vector<int>& caps, int smax, Fn&& fn) {
  if (smax < 0) return;
  std::vector<int> b(caps.size(), 0);
  int sum = 0;
  for (;;) {
    fn(b, sum);
    size_t k = 0;
    while (k < b.size() && (b[k] == caps[k] || sum == smax)) {
      sum -= b[k];
      b[k] = 0;
      ++k;
    }
    if (k == b.size()) break;
    ++b[k];
    ++sum;
  }
}

enum class FactorKind { KernelPole, KernelJump, PurePole };

struct ResidueFactor {
  std::vector<Rational> x;  // coordinates of the linear form in theta space
  int top = 0;              // largest index with x[top] != 0
  int order = 1;            // pole order (0 for KernelJump)
  FactorKind kind = FactorKind::KernelPole;
};

using StateMap = std::map<std::vector<int>, Rational>;

int sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

// Expands the product of the factor series, keeping only states that can
// still be pushed to exponent <= -1 in every variable by the remaining
// poles. Factors must be sorted ascending by top variable.
StateMap build_box(const std::vector<ResidueFactor>& facs, int r, int K,
                   const std::vector<Rational>& h,
                   const std::vector<Rational>& g) {
  // lowcap[f]: most a single pole factor can subtract from its top variable.
  // A residue of order d at factor f absorbs d+i, where the extra depth i is
  // borrowed from support variables below the top; each of those can sit at
  // most total[j]-1 below -1, total[j] being the lowering capacity already
  // spent on variable j (all of it, since factors are sorted by top).
  std::vector<int> total(r, 0);
  std::vector<int> lowcap(facs.size(), 0);
  for (size_t f = 0; f < facs.size(); ++f) {
    const ResidueFactor& fac = facs[f];
    if (fac.kind == FactorKind::KernelJump) continue;
    int depth = 0;
    for (int j = 0; j < fac.top; ++j)
      if (fac.x[j] != 0 && total[j] > 1) depth += total[j] - 1;
    lowcap[f] = fac.order + depth;
    total[fac.top] += lowcap[f];
  }
  // low[f][v]: lowering still available at variable v after factor f-1
  std::vector<std::vector<int>> low(facs.size() + 1, std::vector<int>(r, 0));
  for (size_t f = facs.size(); f-- > 0;) {
    low[f] = low[f + 1];
    low[f][facs[f].top] += lowcap[f];
  }
  StateMap cur;
  cur.emplace(std::vector<int>(r, 0), Rational(1));
  int consumed = 0;
  for (size_t f = 0; f < facs.size(); ++f) {
    const ResidueFactor& fac = facs[f];
    const std::vector<int>& after = low[f + 1];
    StateMap next;
    auto add_state = [&](std::vector<int> m, const Rational& c) {
      if (c == 0) return;
      auto [it, fresh] = next.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) next.erase(it);
      }
    };
    for (const auto& [m, coef] : cur) {
      if (fac.kind != FactorKind::KernelJump) {
        // pole branch: the top variable absorbs order+i, variables below the
        // top borrow i in total. A support variable above -1 can never come
        // back down (everything later has a larger top), so such states are
        // dead here and in the analytic branch alike.
        std::vector<int> js, caps;
        bool stuck = false;
        for (int j = 0; j < fac.top; ++j) {
          if (fac.x[j] == 0) continue;
          if (m[j] > -1) {
            stuck = true;
            break;
          }
          js.push_back(j);
          caps.push_back(-1 - m[j]);
        }
        if (!stuck)
        enumerate_boxed(caps, INT_MAX, [&](const std::vector<int>& b, int i) {
          Rational c = coef;
          if (i % 2) c = -c;
          if (fac.order > 1 || i > 0) {
            Int bin;
            mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)(fac.order - 1 + i),
                         (unsigned long)i);
            c *= Rational(bin) * multinomial(i, b);
          }
          for (size_t t = 0; t < js.size(); ++t)
            if (b[t]) c *= pow_rational(fac.x[js[t]], (unsigned)b[t]);
          c /= pow_rational(fac.x[fac.top], (unsigned)(fac.order + i));
          std::vector<int> mm = m;
          mm[fac.top] -= fac.order + i;
          for (size_t t = 0; t < js.size(); ++t) mm[js[t]] += b[t];
          add_state(std::move(mm), c);
        });
      }
      if (fac.kind != FactorKind::PurePole) {
        // analytic branches: nonnegative powers of the full linear form,
        // bounded by the per-variable headroom and the degree budget
        const int budget = K - (sum_of(m) + consumed);
        bool dead = budget < (fac.kind == FactorKind::KernelPole ? 1 : 0);
        std::vector<int> js, caps;
        for (int j = 0; j <= fac.top && !dead; ++j) {
          if (fac.x[j] == 0) continue;
          int room = -1 + after[j] - m[j];
          if (room < 0) {
            dead = true;
            break;
          }
          js.push_back(j);
          caps.push_back(std::min(room, budget));
        }
        if (!dead) {
          const int smax =
              fac.kind == FactorKind::KernelPole ? budget - 1 : budget;
          enumerate_boxed(caps, smax, [&](const std::vector<int>& b, int s) {
            const int n = fac.kind == FactorKind::KernelPole ? s + 1 : s;
            if (n > budget) return;
            const Rational& series =
                fac.kind == FactorKind::KernelPole ? h[n] : g[n];
            if (series == 0) return;
            Rational c = coef * series * multinomial(s, b);
            for (size_t t = 0; t < js.size(); ++t)
              if (b[t]) c *= pow_rational(fac.x[js[t]], (unsigned)b[t]);
            std::vector<int> mm = m;
            for (size_t t = 0; t < js.size(); ++t) mm[js[t]] += b[t];
            add_state(std::move(mm), c);
          });
        }
      }
    }
    cur = std::move(next);
    consumed += fac.kind == FactorKind::KernelJump ? 0 : fac.order;
  }
  return cur;
}

void sort_factors(std::vector<ResidueFactor>& facs) {
  std::stable_sort(facs.begin(), facs.end(),
                   [](const ResidueFactor& a, const ResidueFactor& b) {
                     return a.top < b.top;
                   });
}

// theta-basis coordinates of a simple-root coordinate vector
std::vector<Rational> theta_coords(const MaximalNestedSet& M,
                                   const std::vector<int>& c, int* top) {
  const size_t r = M.theta_inv.size();
  std::vector<Rational> x(r);
  *top = -1;
  for (size_t k = 0; k < r; ++k) {
    Rational v = 0;
    for (size_t j = 0; j < r; ++j)
      if (c[j]) v += M.theta_inv[k][j] * c[j];
    x[k] = v;
    if (v != 0) *top = (int)k;
  }
  if (*top < 0) throw InternalError("zero linear form in theta coordinates");
  return x;
}

int lex_sign_int(const std::vector<Int>& row, const std::vector<QVector>& p) {
  for (const QVector& v : p) {
    Rational s = 0;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) s += Rational(row[i]) * v[i];
    if (s != 0) return s > 0 ? 1 : -1;
  }
  return 0;
}

int lex_sign_rat(const std::vector<Rational>& row,
                 const std::vector<QVector>& p) {
  for (const QVector& v : p) {
    Rational s = 0;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) s += row[i] * v[i];
    if (s != 0) return s > 0 ? 1 : -1;
  }
  return 0;
}

struct SmithResult {
  std::vector<Int> divisors;
  std::vector<std::vector<Int>> col_ops;  // accumulated column operations
};

// Diagonalizes an integer matrix by unimodular row and column operations,
// with the divisibility chain d1 | d2 | ... Column operations are mirrored
// into col_ops so that preimages of the diagonal lattice can be read off.
SmithResult smith_diagonalize(std::vector<std::vector<Int>> A) {
  const size_t n = A.size();
  std::vector<std::vector<Int>> C(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) C[i][i] = 1;
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t t = 0; t < n; ++t) {
      std::swap(A[t][i], A[t][j]);
      std::swap(C[t][i], C[t][j]);
    }
  };
  auto addmul_row = [&](size_t dst, size_t src, const Int& q) {
    for (size_t t = 0; t < n; ++t) A[dst][t] += q * A[src][t];
  };
  auto addmul_col = [&](size_t dst, size_t src, const Int& q) {
    for (size_t t = 0; t < n; ++t) {
      A[t][dst] += q * A[t][src];
      C[t][dst] += q * C[t][src];
    }
  };
  for (size_t k = 0; k < n; ++k) {
    for (;;) {
      size_t pi = n, pj = n;
      for (size_t i = k; i < n; ++i)
        for (size_t j = k; j < n; ++j)
          if (A[i][j] != 0 &&
              (pi == n || mpz_cmpabs(A[i][j].get_mpz_t(),
                                     A[pi][pj].get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;
      if (pi != k) std::swap(A[k], A[pi]);
      if (pj != k) swap_cols(k, pj);
      bool dirty = false;
      for (size_t i = k + 1; i < n; ++i) {
        if (A[i][k] == 0) continue;
        Int q = A[i][k] / A[k][k];
        addmul_row(i, k, -q);
        dirty = dirty || A[i][k] != 0;
      }
      if (dirty) continue;
      for (size_t j = k + 1; j < n; ++j) {
        if (A[k][j] == 0) continue;
        Int q = A[k][j] / A[k][k];
        addmul_col(j, k, -q);
        dirty = dirty || A[k][j] != 0;
      }
      if (dirty) continue;
      bool fixed = false;
      for (size_t i = k + 1; i < n && !fixed; ++i)
        for (size_t j = k + 1; j < n && !fixed; ++j)
          if (A[i][j] % A[k][k] != 0) {
            addmul_row(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  SmithResult out;
  out.divisors.resize(n);
  for (size_t k = 0; k < n; ++k) out.divisors[k] = abs(A[k][k]);
  out.col_ops = std::move(C);
  return out;
}

}  // namespace

bool TorusElement::is_identity() const {
  for (int t : tau)
    if (t) return false;
  return true;
}

std::vector<TorusElement> torus_subgroup(const RootSystem& rs,
                                         const std::vector<int>& sigma) {
  const int r = rs.rank();
  if ((int)sigma.size() != r)
    throw InternalError("torus subset size differs from the rank");
  std::vector<std::vector<Int>> A(r, std::vector<Int>(r));
  for (int i = 0; i < r; ++i) {
    const auto& c = rs.root_simple_coords().at((size_t)sigma[i]);
    for (int j = 0; j < r; ++j) A[i][j] = c[j];
  }
  SmithResult sm = smith_diagonalize(std::move(A));
  for (const Int& d : sm.divisors)
    if (d != 1 && d != 2)
      throw InternalError("torus subgroup has an invariant factor outside {1,2}");
  std::vector<TorusElement> out;
  std::vector<int> m(r, 0);
  for (;;) {
    TorusElement g;
    g.tau.assign(r, 0);
    for (int i = 0; i < r; ++i) {
      Int twice = 0;  // twice the i-th coordinate of the representative
      for (int k = 0; k < r; ++k)
        if (m[k]) twice += sm.col_ops[i][k];
      g.tau[i] = mpz_odd_p(twice.get_mpz_t()) ? 1 : 0;
    }
    out.push_back(std::move(g));
    int k = 0;
    while (k < r) {
      if (sm.divisors[k] == 2 && m[k] == 0) {
        m[k] = 1;
        break;
      }
      m[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  return out;
}

PartitionEngine::PartitionEngine(const RootSystem& rs, EngineOptions opts)
    : rs_(rs), opts_(std::move(opts)) {
  mpns_ = load_or_enumerate_mpns(rs_, opts_.cache_dir);
  arr_ = build_arrangement(rs_);
  const int r = rs_.rank();
  for (int s = 1 + std::max(0, opts_.perturb_variant);; ++s) {
    if (s > 100000) throw InternalError("no regular direction found");
    QVector d(r);
    Rational p = 1;
    for (int i = 0; i < r; ++i) {
      d[i] = p;
      p *= s;
    }
    if (is_regular(arr_, d)) {
      delta_ = std::move(d);
      break;
    }
  }
}

std::string PartitionEngine::lex_key(const LexPoint& p) const {
  std::string key;
  key.reserve(arr_.normals.size());
  for (const auto& normal : arr_.normals) {
    int s = lex_sign_int(normal, p);
    if (s == 0) throw InternalError("chamber sign left unresolved");
    key.push_back(s > 0 ? '+' : '-');
  }
  return key;
}

void PartitionEngine::ensure_basic_subsets() {
  if (basic_subsets_ready_) return;
  const int r = rs_.rank();
  const int n = (int)rs_.positive_roots().size();
  std::vector<int> idx((size_t)r);
  std::function<void(int, int)> rec = [&](int start, int got) {
    if (got == r) {
      linalg::Mat m;
      for (int i = 0; i < r; ++i) {
        const auto& c = rs_.root_simple_coords()[(size_t)idx[(size_t)i]];
        m.push_back(linalg::Row(c.begin(), c.end()));
      }
      if (linalg::rank(m) == (size_t)r) basic_subsets_.push_back(idx);
      return;
    }
    for (int i = start; i <= n - (r - got); ++i) {
      idx[(size_t)got] = i;
      rec(i + 1, got + 1);
    }
  };
  rec(0, 0);
  basic_subsets_ready_ = true;
}

const std::vector<std::vector<int>>& PartitionEngine::sigma_taus(int bi) {
  auto it = sigma_tau_cache_.find(bi);
  if (it != sigma_tau_cache_.end()) return it->second;
  std::vector<std::vector<int>> taus;
  for (TorusElement& g : torus_subgroup(rs_, basic_subsets_[(size_t)bi]))
    taus.push_back(std::move(g.tau));
  return sigma_tau_cache_.emplace(bi, std::move(taus)).first->second;
}

const PartitionEngine::ChamberData& PartitionEngine::chamber(const LexPoint& p) {
  std::string key = lex_key(p);
  if (auto it = chambers_.find(key); it != chambers_.end()) return it->second;
  const int r = rs_.rank();
  ChamberData data;
  for (size_t mi = 0; mi < mpns_.size(); ++mi) {
    bool inside = true;
    for (int k = 0; k < r && inside; ++k) {
      int s = lex_sign_rat(mpns_[mi].theta_inv[(size_t)k], p);
      if (s == 0)
        throw SingularVectorError("point lies on a wall of a nested-set cone");
      inside = s > 0;
    }
    if (inside) data.selected.push_back((int)mi);
  }
  std::set<std::vector<int>> taus;
  taus.insert(std::vector<int>((size_t)r, 0));
  // Families B, C, D can have nontrivial torus characters; family A root
  // bases are unimodular, so only the identity ever contributes there.
  if (rs_.family() != Family::A) {
    ensure_basic_subsets();
    for (size_t bi = 0; bi < basic_subsets_.size(); ++bi) {
      linalg::Mat cols((size_t)r, linalg::Row((size_t)r));
      for (int j = 0; j < r; ++j) {
        const auto& c = rs_.root_simple_coords()[(size_t)basic_subsets_[bi][(size_t)j]];
        for (int i = 0; i < r; ++i) cols[(size_t)i][(size_t)j] = c[(size_t)i];
      }
      linalg::Mat inv = linalg::inverse(cols);
      bool inside = true;
      for (int k = 0; k < r && inside; ++k)
        inside = lex_sign_rat(inv[(size_t)k], p) > 0;
      if (!inside) continue;
      for (const auto& tau : sigma_taus((int)bi)) taus.insert(tau);
    }
  }
  data.taus.assign(taus.begin(), taus.end());
  ++stats_.chambers_built;
  return chambers_.emplace(std::move(key), std::move(data)).first->second;
}

const PartitionEngine::PreparedBox& PartitionEngine::negbox(
    int mi, const std::vector<int>& tau) {
  auto key = std::make_pair(mi, tau);
  if (auto it = boxes_.find(key); it != boxes_.end()) return it->second;
  const MaximalNestedSet& M = mpns_[(size_t)mi];
  const int r = rs_.rank();
  std::vector<ResidueFactor> facs;
  int P = 0;
  for (const auto& c : rs_.root_simple_coords()) {
    int par = 0;
    for (int i = 0; i < r; ++i) par += tau[(size_t)i] * c[(size_t)i];
    ResidueFactor rf;
    rf.kind = par % 2 == 0 ? FactorKind::KernelPole : FactorKind::KernelJump;
    rf.order = rf.kind == FactorKind::KernelPole ? 1 : 0;
    rf.x = theta_coords(M, c, &rf.top);
    P += rf.order;
    facs.push_back(std::move(rf));
  }
  PreparedBox box;
  if (P >= r) {
    sort_factors(facs);
    const int K = P - r;
    const std::vector<Rational> h = pole_series(K + 1);
    const std::vector<Rational> g = jump_series(K + 1);
    const Rational volume(M.volume);
    for (const auto& [m, D] : build_box(facs, r, K, h, g)) {
      std::vector<int> e((size_t)r);
      Rational c = D / volume;
      bool dead = false;
      for (int k = 0; k < r; ++k) {
        e[(size_t)k] = -1 - m[(size_t)k];
        if (e[(size_t)k] < 0) {
          // the exponential only contributes nonnegative powers, so a
          // leftover positive exponent kills the iterated residue
          dead = true;
          break;
        }
        if (e[(size_t)k] > 1) c /= Rational(factorial((unsigned)e[(size_t)k]));
      }
      if (dead) continue;
      auto [it, fresh] = box.emplace(std::move(e), c);
      if (!fresh) it->second += c;
    }
    for (auto it = box.begin(); it != box.end();)
      it = it->second == 0 ? box.erase(it) : std::next(it);
  }
  ++stats_.boxes_built;
  stats_.box_states += (long long)box.size();
  return boxes_.emplace(std::move(key), std::move(box)).first->second;
}

Int PartitionEngine::kostant_partition(const Weight& a) {
  if (!rs_.in_root_lattice(a) || !rs_.in_positive_cone(a)) return 0;
  const QVector c = rs_.simple_root_coords(a);
  const int r = rs_.rank();
  std::vector<Int> key;
  key.reserve(c.size());
  for (const Rational& q : c) key.push_back(to_integer(q));
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.partition_cache_hits;
    return it->second;
  }
  ++stats_.partition_evals;
  const ChamberData& ch = chamber(LexPoint{c, delta_});
  Rational total = 0;
  for (const auto& tau : ch.taus) {
    Int pair = 0;
    for (int i = 0; i < r; ++i)
      if (tau[(size_t)i]) pair += key[(size_t)i];
    const bool flip = mpz_odd_p(pair.get_mpz_t());
    Rational inner = 0;
    for (int mi : ch.selected) {
      const PreparedBox& box = negbox(mi, tau);
      if (box.empty()) continue;
      const MaximalNestedSet& M = mpns_[(size_t)mi];
      std::vector<Rational> l((size_t)r);
      for (int k = 0; k < r; ++k) {
        Rational v = 0;
        for (int j = 0; j < r; ++j)
          if (c[(size_t)j] != 0)
            v += M.theta_inv[(size_t)k][(size_t)j] * c[(size_t)j];
        l[(size_t)k] = v;
      }
      for (const auto& [e, C] : box) {
        Rational term = C;
        for (int k = 0; k < r; ++k)
          if (e[(size_t)k]) term *= pow_rational(l[(size_t)k], (unsigned)e[(size_t)k]);
        inner += term;
      }
    }
    total += flip ? -inner : inner;
  }
  Int value = to_integer(total);
  if (value < 0) throw InternalError("negative partition value");
  memo_.emplace(std::move(key), value);
  return value;
}

Int PartitionEngine::kostant_partition_dp(const Weight& a) const {
  if (!rs_.in_root_lattice(a) || !rs_.in_positive_cone(a)) return 0;
  const QVector cq = rs_.simple_root_coords(a);
  const int r = rs_.rank();
  std::vector<long> dims((size_t)r);
  long cells = 1;
  for (int i = 0; i < r; ++i) {
    Int ci = to_integer(cq[(size_t)i]);
    if (!ci.fits_slong_p() || cells > 20000000 / (ci.get_si() + 1))
      throw UsageError("argument too large for the dynamic-programming evaluator");
    dims[(size_t)i] = ci.get_si() + 1;
    cells *= dims[(size_t)i];
  }
  std::vector<long> stride((size_t)r);
  stride[0] = 1;
  for (int i = 1; i < r; ++i) stride[(size_t)i] = stride[(size_t)i - 1] * dims[(size_t)i - 1];
  std::vector<Int> f((size_t)cells, 0);
  f[0] = 1;
  for (const auto& rc : rs_.root_simple_coords()) {
    long off = 0;
    for (int i = 0; i < r; ++i) off += rc[(size_t)i] * stride[(size_t)i];
    std::vector<long> digit((size_t)r, 0);
    for (long idx = 0; idx < cells; ++idx) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) ok = digit[(size_t)i] >= rc[(size_t)i];
      if (ok) f[(size_t)idx] += f[(size_t)(idx - off)];
      int i = 0;
      while (i < r && ++digit[(size_t)i] == dims[(size_t)i]) digit[(size_t)i++] = 0;
    }
  }
  return f[(size_t)cells - 1];
}

QuasiPolynomial PartitionEngine::kostant_stretch(const Weight& A, const Weight& B) {
  if (!rs_.in_root_lattice(A) || !rs_.in_root_lattice(B))
    throw UsageError("stretch target must lie in the root lattice");
  const std::vector<std::string> vars{"t"};
  std::vector<MultiPoly> forms;
  for (int i = 0; i < rs_.dim(); ++i) {
    MultiPoly f(vars);
    if (A[(size_t)i] != 0) f.add_term({1}, A[(size_t)i]);
    if (B[(size_t)i] != 0) f.add_term({0}, B[(size_t)i]);
    forms.push_back(std::move(f));
  }
  QuasiBuilder qb(vars);
  if (auto ev = formal_terms_on_ray(forms, A, B))
    for (const FormalTerm& t : ev->terms) qb.add(t.phase, t.value, 1);
  return qb.build();
}

FormalEvaluation PartitionEngine::formal_terms(
    const std::vector<MultiPoly>& canonical_forms, const Weight& base) {
  if (!rs_.in_positive_cone(base)) return FormalEvaluation{{}, "outside"};
  const QVector c = rs_.simple_root_coords(base);
  return formal_eval(canonical_forms, LexPoint{c, delta_});
}

std::optional<FormalEvaluation> PartitionEngine::formal_terms_on_ray(
    const std::vector<MultiPoly>& canonical_forms, const Weight& A,
    const Weight& B) {
  const QVector cA = rs_.simple_root_coords(A);
  const QVector cB = rs_.simple_root_coords(B);
  for (size_t i = 0; i < cA.size(); ++i) {
    if (cA[i] > 0) continue;
    if (cA[i] < 0 || cB[i] < 0) return std::nullopt;
  }
  return formal_eval(canonical_forms, LexPoint{cA, cB, delta_});
}

FormalEvaluation PartitionEngine::formal_eval(
    const std::vector<MultiPoly>& canonical_forms, const LexPoint& p) {
  const int r = rs_.rank();
  const std::vector<MultiPoly> cforms = simple_coord_forms(canonical_forms);
  const std::vector<std::string>& vars = canonical_forms.at(0).vars();
  const ChamberData& ch = chamber(p);
  FormalEvaluation out;
  out.chamber = lex_key(p);
  for (const auto& tau : ch.taus) {
    MultiPoly phase(vars);
    for (int i = 0; i < r; ++i)
      if (tau[(size_t)i]) phase = phase + cforms[(size_t)i];
    MultiPoly value(vars);
    for (int mi : ch.selected) {
      const PreparedBox& box = negbox(mi, tau);
      if (box.empty()) continue;
      const MaximalNestedSet& M = mpns_[(size_t)mi];
      std::vector<MultiPoly> L((size_t)r, MultiPoly(vars));
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
          if (M.theta_inv[(size_t)k][(size_t)j] != 0)
            L[(size_t)k] =
                L[(size_t)k] + cforms[(size_t)j] * M.theta_inv[(size_t)k][(size_t)j];
      for (const auto& [e, C] : box) {
        MultiPoly term = MultiPoly::constant(vars, C);
        for (int k = 0; k < r; ++k)
          if (e[(size_t)k]) term = term * L[(size_t)k].pow((unsigned)e[(size_t)k]);
        value = value + term;
      }
    }
    if (!value.is_zero())
      out.terms.push_back(FormalTerm{std::move(phase), std::move(value)});
  }
  return out;
}

std::vector<MultiPoly> PartitionEngine::simple_coord_forms(
    const std::vector<MultiPoly>& w) const {
  const int d = rs_.dim();
  const int r = rs_.rank();
  if ((int)w.size() != d)
    throw InternalError("canonical coordinate form arity mismatch");
  std::vector<MultiPoly> pre((size_t)d);
  pre[0] = w[0];
  for (int i = 1; i < d; ++i) pre[(size_t)i] = pre[(size_t)i - 1] + w[(size_t)i];
  std::vector<MultiPoly> c((size_t)r);
  const Rational half(1, 2);
  switch (rs_.family()) {
    case Family::A:
    case Family::B:
      for (int i = 0; i < r; ++i) c[(size_t)i] = pre[(size_t)i];
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) c[(size_t)i] = pre[(size_t)i];
      c[(size_t)r - 1] = pre[(size_t)r - 1] * half;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) c[(size_t)i] = pre[(size_t)i];
      c[(size_t)r - 2] = (pre[(size_t)r - 2] - w[(size_t)r - 1]) * half;
      c[(size_t)r - 1] = (pre[(size_t)r - 2] + w[(size_t)r - 1]) * half;
      break;
  }
  return c;
}

Rational PartitionEngine::rational_residue(const std::vector<int>& mult,
                                           const Weight& a,
                                           const Weight& chamber_point) {
  const int r = rs_.rank();
  const auto& rows = rs_.root_simple_coords();
  if (mult.size() != rows.size())
    throw UsageError("multiplicity vector arity differs from the root count");
  const QVector cp = rs_.simple_root_coords(chamber_point);
  const QVector ca = rs_.simple_root_coords(a);
  const ChamberData& ch = chamber(LexPoint{cp, delta_});
  Rational total = 0;
  for (int mi : ch.selected) {
    const MaximalNestedSet& M = mpns_[(size_t)mi];
    std::vector<ResidueFactor> facs;
    int P = 0;
    for (size_t t = 0; t < rows.size(); ++t) {
      if (mult[t] == 0) continue;
      if (mult[t] < 0) throw UsageError("negative pole order");
      ResidueFactor rf;
      rf.kind = FactorKind::PurePole;
      rf.order = mult[t];
      rf.x = theta_coords(M, rows[t], &rf.top);
      P += mult[t];
      facs.push_back(std::move(rf));
    }
    if (P < r) continue;
    sort_factors(facs);
    const std::vector<Rational> none;
    // exponential coordinates in the theta basis
    std::vector<Rational> lv((size_t)r);
    for (int k = 0; k < r; ++k) {
      Rational v = 0;
      for (int j = 0; j < r; ++j)
        if (ca[(size_t)j] != 0) v += M.theta_inv[(size_t)k][(size_t)j] * ca[(size_t)j];
      lv[(size_t)k] = v;
    }
    Rational sub = 0;
    for (const auto& [m, D] : build_box(facs, r, P - r, none, none)) {
      Rational term = D;
      bool dead = false;
      for (int k = 0; k < r; ++k) {
        const int e = -1 - m[(size_t)k];
        if (e < 0) {
          dead = true;
          break;
        }
        if (e > 0) term *= pow_rational(lv[(size_t)k], (unsigned)e) /
                           Rational(factorial((unsigned)e));
      }
      if (!dead) sub += term;
    }
    total += sub / Rational(M.volume);
  }
  return total;
}

std::string PartitionEngine::chamber_key(const Weight& a) {
  return lex_key(LexPoint{rs_.simple_root_coords(a), delta_});
}

std::string PartitionEngine::chamber_key_on_ray(const Weight& A, const Weight& B) {
  return lex_key(
      LexPoint{rs_.simple_root_coords(A), rs_.simple_root_coords(B), delta_});
}

}  // namespace liemult
