// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/root_system.hpp"

#include <algorithm>

#include "liemult/errors.hpp"

namespace liemult {

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw UsageError("unknown family '" + s + "' (expected A, B, C or D)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  throw InternalError("bad family tag");
}

bool QVectorLess::operator()(const QVector& a, const QVector& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// Comparator implementing the chosen total order on roots.
bool root_less(const QVector& a, const QVector& b, TotalOrder order) {
  QVectorLess less;
  if (order == TotalOrder::LexCanonical) return less(a, b);
  QVector ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  return less(ra, rb);
}

// Exact Gaussian elimination solve of M x = rhs for square M.
QVector solve_linear(std::vector<QVector> m, QVector rhs) {
  size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular matrix in solve_linear");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = 1 / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank, TotalOrder order)
    : family_(family), rank_(rank), order_(order) {
  switch (family_) {
    case Family::A:
      if (rank < 1) throw UsageError("family A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2)
        throw UsageError("families B and C require rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw UsageError("family D requires rank >= 3");
      break;
  }
  dim_ = (family_ == Family::A) ? rank_ + 1 : rank_;
  order_version_ =
      (order_ == TotalOrder::LexCanonical) ? "lex1" : "rlex1";
  build_roots();
  build_fundamentals();
}

void RootSystem::build_roots() {
  const int n = dim_;
  auto unit = [&](int i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<QVector> roots;
  if (family_ == Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) roots.push_back(unit(i) - unit(j));
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        roots.push_back(unit(i) - unit(j));
        if (family_ != Family::A) {
          // e_i + e_j for B, C, D
          roots.push_back(unit(i) + unit(j));
        }
      }
      if (family_ == Family::B) roots.push_back(unit(i));
      if (family_ == Family::C) roots.push_back(Rational(2) * unit(i));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [&](const QVector& a, const QVector& b) {
              return root_less(a, b, order_);
            });
  positive_roots_ = std::move(roots);

  size_t expected = 0;
  switch (family_) {
    case Family::A: expected = size_t(rank_) * (rank_ + 1) / 2; break;
    case Family::B:
    case Family::C: expected = size_t(rank_) * rank_; break;
    case Family::D: expected = size_t(rank_) * (rank_ - 1); break;
  }
  if (positive_roots_.size() != expected)
    throw InternalError("positive root count mismatch");

  for (size_t k = 0; k < positive_roots_.size(); ++k)
    index_of_root_[positive_roots_[k]] = static_cast<int>(k);

  // Simple roots in Dynkin order.
  simple_roots_.clear();
  for (int i = 0; i + 1 < n; ++i)
    simple_roots_.push_back(unit(i) - unit(i + 1));
  switch (family_) {
    case Family::A: break;
    case Family::B: simple_roots_.push_back(unit(n - 1)); break;
    case Family::C: simple_roots_.push_back(Rational(2) * unit(n - 1)); break;
    case Family::D:
      simple_roots_.push_back(unit(n - 2) + unit(n - 1));
      break;
  }
  if (static_cast<int>(simple_roots_.size()) != rank_)
    throw InternalError("simple root count mismatch");
  simple_indices_.clear();
  for (const auto& a : simple_roots_) {
    int idx = root_index(a);
    if (idx < 0) throw InternalError("simple root missing from root list");
    simple_indices_.push_back(idx);
  }

  // Integer simple-root coordinates of every positive root.
  root_simple_coords_.clear();
  for (const auto& a : positive_roots_) {
    QVector c = simple_root_coords(a);
    std::vector<int> ci;
    for (const auto& q : c) {
      if (!is_integer(q) || q < 0)
        throw InternalError("positive root with bad simple coordinates");
      ci.push_back(static_cast<int>(q.get_num().get_si()));
    }
    root_simple_coords_.push_back(std::move(ci));
  }

  // rho: (r, r-1, ..., 0) for A (any multiple of the all-ones vector cancels
  // in every formula we use); half the positive-root sum otherwise.
  rho_.assign(n, Rational(0));
  if (family_ == Family::A) {
    for (int i = 0; i < n; ++i) rho_[i] = rank_ - i;
  } else {
    for (const auto& a : positive_roots_) rho_ = rho_ + a;
    rho_ = Rational(1, 2) * rho_;
  }
}

void RootSystem::build_fundamentals() {
  // Solve <omega_i, alpha_j^vee> = delta_ij. For A the system has a kernel
  // (the all-ones direction); pin it by requiring last coordinate zero.
  const int n = dim_;
  std::vector<QVector> m;
  for (const auto& a : simple_roots_) {
    Rational norm = inner(a, a);
    m.push_back((Rational(2) / norm) * a);
  }
  if (family_ == Family::A) {
    QVector pin(n, Rational(0));
    pin[n - 1] = 1;
    m.push_back(pin);
  }
  fundamental_weights_.clear();
  for (int i = 0; i < rank_; ++i) {
    QVector rhs(m.size(), Rational(0));
    rhs[i] = 1;
    fundamental_weights_.push_back(solve_linear(m, rhs));
  }
  // rho has all fundamental coordinates equal to 1.
  for (int i = 0; i < rank_; ++i)
    if (pair_coroot(rho_, i) != 1)
      throw InternalError("rho pairing check failed");
}

int RootSystem::root_index(const Weight& root) const {
  auto it = index_of_root_.find(root);
  return it == index_of_root_.end() ? -1 : it->second;
}

QVector RootSystem::simple_root_coords(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_)
    throw UsageError("weight has wrong dimension");
  const int r = rank_;
  QVector c(r, Rational(0));
  Rational p = 0;  // running prefix sum
  switch (family_) {
    case Family::A: {
      for (int i = 0; i < r; ++i) {
        p += w[i];
        c[i] = p;
      }
      if (p + w[r] != 0)
        throw UsageError("weight is outside the span of the simple roots");
      return c;
    }
    case Family::B: {
      for (int i = 0; i < r; ++i) {
        p += w[i];
        c[i] = p;
      }
      return c;
    }
    case Family::C: {
      for (int i = 0; i < r; ++i) {
        p += w[i];
        c[i] = p;
      }
      c[r - 1] = p / 2;
      return c;
    }
    case Family::D: {
      for (int i = 0; i < r - 1; ++i) {
        p += w[i];
        c[i] = p;
      }
      c[r - 2] = (p - w[r - 1]) / 2;
      c[r - 1] = (p + w[r - 1]) / 2;
      return c;
    }
  }
  throw InternalError("bad family tag");
}

bool RootSystem::in_positive_cone(const Weight& w) const {
  QVector c;
  try {
    c = simple_root_coords(w);
  } catch (const UsageError&) {
    return false;  // A only: outside the traceless span
  }
  for (const auto& q : c)
    if (q < 0) return false;
  return true;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_) return false;
  Rational sum = 0;
  for (const auto& q : w) {
    if (!is_integer(q)) return false;
    sum += q;
  }
  switch (family_) {
    case Family::A: return sum == 0;
    case Family::B: return true;
    case Family::C:
    case Family::D: {
      Int s = to_integer(sum);
      return mpz_even_p(s.get_mpz_t()) != 0;
    }
  }
  return false;
}

bool RootSystem::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_)
    throw UsageError("weight has wrong dimension");
  for (int i = 0; i + 1 < dim_; ++i) {
    if (family_ == Family::D && i + 2 == dim_) break;
    if (w[i] < w[i + 1]) return false;
  }
  switch (family_) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return w[dim_ - 1] >= 0;
    case Family::D: {
      Rational last = w[dim_ - 1];
      Rational abs_last = last < 0 ? -last : last;
      return w[dim_ - 2] >= abs_last;
    }
  }
  return false;
}

Weight RootSystem::from_funda_to_cano(const QVector& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw UsageError("fundamental coordinate vector has wrong length");
  Weight w(dim_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    w = w + v[i] * fundamental_weights_[i];
  return w;
}

QVector RootSystem::from_cano_to_funda(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_)
    throw UsageError("weight has wrong dimension");
  Weight x = w;
  if (family_ == Family::A) {
    // Project onto the traceless hyperplane first.
    Rational sum = 0;
    for (const auto& q : x) sum += q;
    Rational shift = sum / dim_;
    for (auto& q : x) q -= shift;
  }
  QVector v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = pair_coroot(x, i);
  return v;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) {
  return dot(a, b);
}

Rational RootSystem::pair_coroot(const Weight& w, size_t i) const {
  const Weight& a = simple_roots_[i];
  return Rational(2) * inner(w, a) / inner(a, a);
}

}  // namespace liemult
