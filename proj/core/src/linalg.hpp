// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
//
// Small dense exact-rational linear algebra, private to the library sources.
#pragma once

#include <optional>
#include <vector>

#include "liemult/errors.hpp"
#include "liemult/rational.hpp"

namespace liemult::linalg {

using Row = std::vector<Rational>;
using Mat = std::vector<Row>;

// Reduced row echelon form in place; returns the rank.
inline int rref(Mat& m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  m.resize(row);  // drop zero rows
  return static_cast<int>(row);
}

inline int rank(Mat m) { return rref(m); }

// Does v lie in the row space of the RREF matrix r?
inline bool in_row_space(const Mat& r, Row v) {
  for (const Row& row : r) {
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] != 0) {
      Rational f = v[lead];
      for (size_t j = lead; j < v.size(); ++j) v[j] -= f * row[j];
    }
  }
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

inline Rational det(Mat m) {
  const size_t n = m.size();
  Rational d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[col], m[piv]);
      d = -d;
    }
    d *= m[col][col];
    Rational inv = 1 / m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] * inv;
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

inline Mat inverse(Mat m) {
  const size_t n = m.size();
  Mat inv(n, Row(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular matrix");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    Rational f = 1 / m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational g = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

inline Row mat_vec(const Mat& m, const Row& v) {
  Row out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

// One-dimensional kernel of a (rows x cols) matrix, if the nullity is
// exactly one; rational representative with a leading free coordinate 1.
inline std::optional<Row> nullspace1(Mat m, size_t cols) {
  int rk = rref(m);
  if (static_cast<size_t>(rk) + 1 != cols) return std::nullopt;
  std::vector<int> lead_of(cols, -1);
  for (size_t i = 0; i < m.size(); ++i) {
    size_t lead = 0;
    while (lead < cols && m[i][lead] == 0) ++lead;
    lead_of[lead] = static_cast<int>(i);
  }
  size_t free_col = 0;
  while (free_col < cols && lead_of[free_col] >= 0) ++free_col;
  Row v(cols, 0);
  v[free_col] = 1;
  for (size_t c = 0; c < cols; ++c) {
    if (lead_of[c] >= 0) v[c] = -m[lead_of[c]][free_col];
  }
  return v;
}

}  // namespace liemult::linalg
