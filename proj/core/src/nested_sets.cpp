// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/nested_sets.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"
#include "liemult/errors.hpp"
#include "linalg.hpp"

namespace liemult {
namespace {

using linalg::Mat;
using linalg::Row;

Row root_row(const RootSystem& rs, int idx) {
  const auto& c = rs.root_simple_coords()[idx];
  Row r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
  return r;
}

// All positive roots lying in the span of the given ones, sorted.
std::vector<int> span_closure(const RootSystem& rs, const std::vector<int>& roots) {
  Mat m;
  for (int idx : roots) m.push_back(root_row(rs, idx));
  linalg::rref(m);
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive_roots(); ++i)
    if (linalg::in_row_space(m, root_row(rs, i))) out.push_back(i);
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Partition of S into matroid-connected components: elements sharing a
// fundamental circuit with respect to a greedy basis are connected.
std::vector<std::vector<int>> components(const RootSystem& rs,
                                         const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> basis_pos;
  Mat basis_rref;
  for (int p = 0; p < n; ++p) {
    Row r = root_row(rs, s[p]);
    if (!linalg::in_row_space(basis_rref, r)) {
      basis_pos.push_back(p);
      basis_rref.push_back(std::move(r));
      linalg::rref(basis_rref);
    }
  }
  Dsu dsu(n);
  const size_t cols = rs.rank();
  for (int p = 0; p < n; ++p) {
    if (std::binary_search(basis_pos.begin(), basis_pos.end(), p)) continue;
    // express s[p] over the basis roots; the solve matrix has one column per
    // basis element plus the target as the last column
    Mat m(cols, Row(basis_pos.size() + 1, 0));
    for (size_t b = 0; b < basis_pos.size(); ++b) {
      Row r = root_row(rs, s[basis_pos[b]]);
      for (size_t i = 0; i < cols; ++i) m[i][b] = r[i];
    }
    Row t = root_row(rs, s[p]);
    for (size_t i = 0; i < cols; ++i) m[i][basis_pos.size()] = t[i];
    linalg::rref(m);
    for (const Row& row : m) {
      size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      if (lead >= basis_pos.size()) continue;
      if (row[basis_pos.size()] != 0) dsu.join(p, basis_pos[lead]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int p = 0; p < n; ++p) groups[dsu.find(p)].push_back(s[p]);
  std::vector<std::vector<int>> out;
  for (auto& [root, grp] : groups) out.push_back(std::move(grp));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_complete(const RootSystem& rs, const std::vector<int>& s) {
  return span_closure(rs, s) == s;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

// Builds the derived data; returns false when M is improper.
bool finish_mns(const RootSystem& rs, MaximalNestedSet& m) {
  const int r = rs.rank();
  m.phi.clear();
  for (const auto& mem : m.members) m.phi.push_back(mem.back());
  std::vector<int> theta = m.phi;
  std::sort(theta.begin(), theta.end());
  if (std::unique(theta.begin(), theta.end()) != theta.end()) return false;
  Mat mat(r, Row(r));
  for (int k = 0; k < r; ++k) {
    Row col = root_row(rs, theta[k]);
    for (int i = 0; i < r; ++i) mat[i][k] = col[i];
  }
  Rational d = linalg::det(mat);
  if (d == 0) return false;
  m.theta = std::move(theta);
  if (d < 0) d = -d;
  if (d.get_den() != 1) throw InternalError("root matrix determinant not integral");
  m.volume = d.get_num();
  m.theta_inv = linalg::inverse(mat);
  return true;
}

}  // namespace

std::vector<std::vector<int>> irreducible_subsets(const RootSystem& rs) {
  const int n = rs.num_positive_roots();
  const int r = rs.rank();
  // every complete subset is span-of-some-root-subset intersected with
  // Delta+, so collecting distinct spans of subsets of size <= r finds all
  std::set<std::vector<int>> seen;
  std::vector<int> comb;
  std::vector<std::vector<int>> result;
  auto visit = [&](const std::vector<int>& subset) {
    std::vector<int> closure = span_closure(rs, subset);
    if (!seen.insert(closure).second) return;
    if (components(rs, closure).size() == 1) result.push_back(closure);
  };
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth > 0) visit(comb);
    if (depth == r) return;
    for (int i = start; i < n; ++i) {
      comb.push_back(i);
      rec(i + 1, depth + 1);
      comb.pop_back();
    }
  };
  rec(0, 0);
  std::sort(result.begin(), result.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return result;
}

bool is_nested_family(const RootSystem& rs,
                      const std::vector<std::vector<int>>& members) {
  const size_t n = members.size();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> idx;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(static_cast<int>(i));
    bool antichain = true;
    for (size_t a = 0; a < idx.size() && antichain; ++a)
      for (size_t b = a + 1; b < idx.size() && antichain; ++b)
        if (contains_all(members[idx[a]], members[idx[b]]) ||
            contains_all(members[idx[b]], members[idx[a]]))
          antichain = false;
    if (!antichain) continue;
    std::vector<int> u;
    for (int i : idx) u = sorted_union(u, members[i]);
    if (!is_complete(rs, u)) return false;
    std::vector<std::vector<int>> comps = components(rs, u);
    if (comps.size() != idx.size()) return false;
    std::vector<std::vector<int>> want;
    for (int i : idx) want.push_back(members[i]);
    std::sort(want.begin(), want.end());
    if (comps != want) return false;
  }
  return true;
}

std::vector<MaximalNestedSet> enumerate_mpns(const RootSystem& rs) {
  const int r = rs.rank();
  const std::vector<std::vector<int>> irr = irreducible_subsets(rs);
  const int ni = static_cast<int>(irr.size());

  int full_idx = -1;
  for (int i = 0; i < ni; ++i)
    if (static_cast<int>(irr[i].size()) == rs.num_positive_roots()) full_idx = i;
  if (full_idx < 0) throw InternalError("Delta+ is not irreducible");

  // pairwise nestedness, used to prune the search; the final family still
  // goes through the exhaustive checker
  std::vector<std::vector<char>> compat(ni, std::vector<char>(ni, 0));
  for (int i = 0; i < ni; ++i)
    for (int j = i + 1; j < ni; ++j) {
      bool ok;
      if (contains_all(irr[i], irr[j]) || contains_all(irr[j], irr[i])) {
        ok = true;
      } else if (intersects(irr[i], irr[j])) {
        ok = false;
      } else {
        std::vector<int> u = sorted_union(irr[i], irr[j]);
        ok = false;
        if (is_complete(rs, u)) {
          std::vector<std::vector<int>> comps = components(rs, u);
          std::vector<std::vector<int>> want{irr[i], irr[j]};
          std::sort(want.begin(), want.end());
          ok = comps == want;
        }
      }
      compat[i][j] = compat[j][i] = ok;
    }

  std::vector<MaximalNestedSet> out;
  std::vector<int> chosen{full_idx};
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == r) {
      std::vector<std::vector<int>> members;
      for (int i : chosen) members.push_back(irr[i]);
      std::sort(members.begin(), members.end());
      if (!is_nested_family(rs, members)) return;
      MaximalNestedSet m;
      m.members = std::move(members);
      if (finish_mns(rs, m)) out.push_back(std::move(m));
      return;
    }
    for (int i = start; i < ni; ++i) {
      if (i == full_idx) continue;
      bool ok = true;
      for (int c : chosen)
        if (c != i && !compat[c][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

std::string cache_file_name(const RootSystem& rs, const std::string& dir) {
  return dir + "/mpns-" + family_name(rs.family()) + std::to_string(rs.rank()) +
         "-" + rs.order_version() + ".json";
}

bool load_cache(const RootSystem& rs, const std::string& path,
                std::vector<MaximalNestedSet>& out) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("family").get<std::string>() != family_name(rs.family())) return false;
    if (j.at("rank").get<int>() != rs.rank()) return false;
    if (j.at("order_version").get<std::string>() != rs.order_version()) return false;
    std::vector<MaximalNestedSet> loaded;
    for (const auto& jm : j.at("mpns")) {
      MaximalNestedSet m;
      for (const auto& jmem : jm.at("members")) {
        std::vector<int> mem = jmem.get<std::vector<int>>();
        for (int idx : mem)
          if (idx < 0 || idx >= rs.num_positive_roots()) return false;
        m.members.push_back(std::move(mem));
      }
      if (static_cast<int>(m.members.size()) != rs.rank()) return false;
      if (!finish_mns(rs, m)) return false;
      // stored derived data must agree with what the members imply
      if (m.theta != jm.at("theta").get<std::vector<int>>()) return false;
      if (m.volume != Int(jm.at("vol").get<std::string>())) return false;
      loaded.push_back(std::move(m));
    }
    out = std::move(loaded);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_cache(const RootSystem& rs, const std::string& path,
                 const std::vector<MaximalNestedSet>& mpns) {
  nlohmann::json j;
  j["family"] = family_name(rs.family());
  j["rank"] = rs.rank();
  j["order_version"] = rs.order_version();
  j["mpns"] = nlohmann::json::array();
  for (const auto& m : mpns) {
    nlohmann::json jm;
    jm["members"] = m.members;
    jm["theta"] = m.theta;
    jm["vol"] = m.volume.get_str();
    j["mpns"].push_back(std::move(jm));
  }
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::string tmp = path + ".tmp";
  {
    std::ofstream outf(tmp);
    if (!outf) return;  // caching is best effort
    outf << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

std::vector<MaximalNestedSet> load_or_enumerate_mpns(const RootSystem& rs,
                                                     const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_mpns(rs);
  const std::string path = cache_file_name(rs, cache_dir);
  std::vector<MaximalNestedSet> out;
  if (load_cache(rs, path, out)) return out;
  out = enumerate_mpns(rs);
  store_cache(rs, path, out);
  return out;
}

namespace {

// primitive integer vector parallel to the rational one, first nonzero > 0
std::vector<Int> primitive(const Row& v) {
  Int lcm = 1;
  for (const Rational& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Int> out(v.size());
  Int gcd = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * Rational(lcm);
    out[i] = s.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
  }
  if (gcd != 0)
    for (Int& x : out) x /= gcd;
  for (const Int& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : out) y = -y;
    break;
  }
  return out;
}

Rational dot_iq(const std::vector<Int>& n, const QVector& c) {
  Rational s = 0;
  for (size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0 && c[i] != 0) s += Rational(n[i]) * c[i];
  return s;
}

QVector power_point(int r, int s) {
  QVector c(r);
  Rational v = 1;
  for (int i = 0; i < r; ++i) {
    c[i] = v;
    v *= s;
  }
  return c;
}

QVector regular_direction(const HyperplaneArrangement& arr, int r) {
  for (int s = 1; s < 1000; ++s) {
    QVector c = power_point(r, s);
    if (is_regular(arr, c)) return c;
  }
  throw InternalError("no regular direction found");
}

}  // namespace

HyperplaneArrangement build_arrangement(const RootSystem& rs) {
  const int r = rs.rank();
  const int n = rs.num_positive_roots();
  HyperplaneArrangement arr;
  if (r < 2) return arr;
  std::set<std::vector<Int>> seen;
  std::vector<int> comb;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(comb.size()) == r - 1) {
      Mat m;
      for (int idx : comb) m.push_back(root_row(rs, idx));
      auto ker = linalg::nullspace1(std::move(m), r);
      if (ker) {
        std::vector<Int> normal = primitive(*ker);
        if (seen.insert(normal).second) arr.normals.push_back(std::move(normal));
      }
      return;
    }
    for (int i = start; i < n; ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  return arr;
}

bool is_regular(const HyperplaneArrangement& arr, const QVector& c) {
  for (const auto& n : arr.normals)
    if (dot_iq(n, c) == 0) return false;
  return true;
}

Weight regular_perturbation(const RootSystem& rs, const HyperplaneArrangement& arr,
                            const Weight& a) {
  if (!rs.in_positive_cone(a))
    throw UsageError("vector must lie in the cone spanned by the positive roots");
  QVector c = rs.simple_root_coords(a);
  if (is_regular(arr, c)) return a;
  QVector dc = regular_direction(arr, rs.rank());
  Rational eps = 1;
  bool any = false;
  for (const auto& n : arr.normals) {
    Rational ha = dot_iq(n, c);
    if (ha == 0) continue;
    Rational hd = dot_iq(n, dc);
    Rational cand = abs(ha) / abs(hd) / 2;
    if (!any || cand < eps) eps = cand;
    any = true;
  }
  Weight out = a;
  for (int i = 0; i < rs.rank(); ++i)
    out = out + (eps * dc[i]) * rs.simple_roots()[i];
  return out;
}

Weight regular_perturbation(const RootSystem& rs, const Weight& a) {
  return regular_perturbation(rs, build_arrangement(rs), a);
}

std::vector<int> select_mpns(const std::vector<MaximalNestedSet>& mpns,
                             const QVector& simple_coords) {
  Row c(simple_coords.begin(), simple_coords.end());
  std::vector<int> out;
  for (size_t k = 0; k < mpns.size(); ++k) {
    Row x = linalg::mat_vec(mpns[k].theta_inv, c);
    bool inside = true;
    for (const Rational& xi : x) {
      if (xi == 0)
        throw SingularVectorError("point lies on a nested-set cone boundary");
      if (xi < 0) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(static_cast<int>(k));
  }
  return out;
}

int count_chambers(const RootSystem& rs) {
  const int r = rs.rank();
  if (r > 4) throw UsageError("chamber counting is supported for rank <= 4 only");
  if (r == 1) return 1;
  const HyperplaneArrangement arr = build_arrangement(rs);
  const int nh = static_cast<int>(arr.normals.size());

  // candidate extreme rays: one-dimensional intersections of r-1 hyperplanes,
  // kept when they lie in the closed cone (all simple coordinates >= 0)
  std::set<std::vector<Rational>> ray_set;
  std::vector<int> comb;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(comb.size()) == r - 1) {
      Mat m;
      for (int idx : comb) {
        Row row(r);
        for (int j = 0; j < r; ++j) row[j] = Rational(arr.normals[idx][j]);
        m.push_back(std::move(row));
      }
      auto ker = linalg::nullspace1(std::move(m), r);
      if (ker) {
        std::vector<Int> prim = primitive(*ker);
        bool nonneg = true, nonpos = true;
        for (const Int& x : prim) {
          if (x > 0) nonpos = false;
          if (x < 0) nonneg = false;
        }
        if (nonneg || nonpos) {
          Row ray(r);
          for (int j = 0; j < r; ++j)
            ray[j] = Rational(nonneg ? prim[j] : -prim[j]);
          ray_set.insert(ray);
        }
      }
      return;
    }
    for (int i = start; i < nh; ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  std::vector<Row> rays(ray_set.begin(), ray_set.end());

  auto sign_key = [&](const QVector& c) {
    std::vector<int8_t> key(nh);
    for (int h = 0; h < nh; ++h) {
      Rational s = dot_iq(arr.normals[h], c);
      if (s == 0) throw InternalError("chamber point on a wall");
      key[h] = s > 0 ? 1 : -1;
    }
    return key;
  };

  QVector seed = regular_direction(arr, r);
  std::map<std::vector<int8_t>, QVector> visited;
  std::vector<std::pair<std::vector<int8_t>, QVector>> queue;
  visited.emplace(sign_key(seed), seed);
  queue.emplace_back(sign_key(seed), seed);

  while (!queue.empty()) {
    auto [key, point] = std::move(queue.back());
    queue.pop_back();
    for (int h = 0; h < nh; ++h) {
      // rays on hyperplane h compatible with this chamber's closure
      Mat on_h;
      for (const Row& ray : rays) {
        QVector rq(ray.begin(), ray.end());
        if (dot_iq(arr.normals[h], rq) != 0) continue;
        bool ok = true;
        for (int h2 = 0; h2 < nh && ok; ++h2) {
          if (h2 == h) continue;
          Rational s = dot_iq(arr.normals[h2], rq);
          if (s != 0 && (s > 0 ? 1 : -1) != key[h2]) ok = false;
        }
        if (ok) on_h.push_back(ray);
      }
      if (on_h.empty() || linalg::rank(on_h) != r - 1) continue;  // not a facet
      QVector mid(r, Rational(0));
      for (const Row& ray : on_h)
        for (int j = 0; j < r; ++j) mid[j] += ray[j];
      QVector dir(r);
      for (int j = 0; j < r; ++j)
        dir[j] = Rational(arr.normals[h][j]) * (key[h] > 0 ? -1 : 1);
      Rational eps = 1;
      bool any = false;
      for (int h2 = 0; h2 < nh; ++h2) {
        if (h2 == h) continue;
        Rational sm = dot_iq(arr.normals[h2], mid);
        if (sm == 0) throw InternalError("facet midpoint on a second wall");
        Rational sd = dot_iq(arr.normals[h2], dir);
        if (sd == 0) continue;
        Rational cand = abs(sm) / abs(sd) / 2;
        if (!any || cand < eps) eps = cand;
        any = true;
      }
      QVector nbr(r);
      bool inside = true;
      for (int j = 0; j < r; ++j) {
        nbr[j] = mid[j] + eps * dir[j];
        if (nbr[j] <= 0) inside = false;  // crossed out of the cone
      }
      if (!inside) continue;
      auto nkey = sign_key(nbr);
      if (visited.emplace(nkey, nbr).second) queue.emplace_back(nkey, nbr);
    }
  }

  // The sign cells refine the chamber complex: the hyperplane spanned by a
  // set of r-1 roots is a genuine wall only inside the cone of those roots.
  // True chambers are the cells of the common refinement of the simplicial
  // cones on rank-sized independent root subsets, so cells merge when they
  // sit inside exactly the same simplicial cones.
  const auto& coords = rs.root_simple_coords();
  const int nr = static_cast<int>(coords.size());
  std::vector<Mat> inverses;
  comb.clear();
  std::function<void(int)> sigma_rec = [&](int start) {
    if (static_cast<int>(comb.size()) == r) {
      Mat cols(r, Row(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          cols[i][j] = Rational(coords[comb[(size_t)j]][(size_t)i]);
      if (linalg::rank(cols) == r) inverses.push_back(linalg::inverse(cols));
      return;
    }
    for (int i = start; i < nr; ++i) {
      comb.push_back(i);
      sigma_rec(i + 1);
      comb.pop_back();
    }
  };
  sigma_rec(0);

  std::set<std::vector<bool>> profiles;
  for (const auto& [key, point] : visited) {
    std::vector<bool> profile;
    profile.reserve(inverses.size());
    for (const Mat& inv : inverses) {
      Row c = linalg::mat_vec(inv, point);
      bool in_cone = true;
      for (const Rational& q : c)
        if (q <= 0) {
          in_cone = false;
          break;
        }
      profile.push_back(in_cone);
    }
    profiles.insert(std::move(profile));
  }
  return static_cast<int>(profiles.size());
}

}  // namespace liemult
