// Copyright 2026 the liemult authors
// SPDX-License-Identifier: Apache-2.0
#include "liemult/laurent.hpp"

#include <sstream>

#include "liemult/errors.hpp"

namespace liemult {

LaurentSeries LaurentSeries::make(std::string var, int lowest,
                                  std::vector<MultiPoly> coeffs, int trunc) {
  if (static_cast<int>(coeffs.size()) != trunc - lowest)
    throw InternalError("laurent series: coefficient count != trunc - lowest");
  LaurentSeries s;
  s.var_ = std::move(var);
  s.lowest_ = lowest;
  s.trunc_ = trunc;
  s.coeffs_ = std::move(coeffs);
  if (!s.coeffs_.empty()) s.coeff_vars_ = s.coeffs_.front().vars();
  for (const auto& c : s.coeffs_)
    if (c.vars() != s.coeff_vars_)
      throw UsageError("mismatched variable universe");
  // Normalize: a nonzero series starts with a nonzero coefficient.
  while (!s.coeffs_.empty() && s.coeffs_.front().is_zero()) {
    s.coeffs_.erase(s.coeffs_.begin());
    ++s.lowest_;
  }
  if (s.coeffs_.empty()) s.lowest_ = s.trunc_;
  return s;
}

LaurentSeries LaurentSeries::constant(std::string var,
                                      std::vector<std::string> coeff_vars,
                                      const Rational& c, int trunc) {
  std::vector<MultiPoly> coeffs;
  if (trunc > 0) {
    coeffs.push_back(MultiPoly::constant(coeff_vars, c));
    for (int k = 1; k < trunc; ++k) coeffs.push_back(MultiPoly(coeff_vars));
  }
  return make(std::move(var), 0, std::move(coeffs), trunc > 0 ? trunc : 0);
}

MultiPoly LaurentSeries::coeff(int k) const {
  if (k >= trunc_)
    throw InternalError("laurent series: coefficient beyond truncation");
  if (k < lowest_) return MultiPoly(coeff_vars_);
  return coeffs_[static_cast<size_t>(k - lowest_)];
}

std::string LaurentSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = lowest_; k < trunc_; ++k) {
    const MultiPoly& c = coeffs_[static_cast<size_t>(k - lowest_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << var_ << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << trunc_ << ")";
  return os.str();
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.var_ != b.var_)
    throw UsageError("series_mul: different active variables");
  if (!a.coeffs_.empty() && !b.coeffs_.empty() &&
      a.coeff_vars_ != b.coeff_vars_)
    throw UsageError("mismatched variable universe");
  int trunc = std::min(a.trunc_ + b.lowest_, b.trunc_ + a.lowest_);
  int lowest = a.lowest_ + b.lowest_;
  const auto& cvars = a.coeffs_.empty() ? b.coeff_vars_ : a.coeff_vars_;
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return LaurentSeries::make(a.var_, trunc, {}, trunc);
  std::vector<MultiPoly> out(static_cast<size_t>(trunc - lowest),
                             MultiPoly(cvars));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      int k = a.lowest_ + static_cast<int>(i) + b.lowest_ +
              static_cast<int>(j);
      if (k >= trunc) break;
      if (b.coeffs_[j].is_zero()) continue;
      out[static_cast<size_t>(k - lowest)] =
          out[static_cast<size_t>(k - lowest)] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries::make(a.var_, lowest, std::move(out), trunc);
}

LaurentSeries series_invert(const LaurentSeries& a) {
  if (a.coeffs_.empty())
    throw InternalError("series_invert: zero series");
  const MultiPoly& lead = a.coeffs_.front();
  if (!lead.is_constant() || lead.constant_value() == 0)
    throw InternalError(
        "series_invert: leading coefficient is zero or non-scalar "
        "(wrong variable ordering)");
  Rational c0 = lead.constant_value();
  size_t n = a.coeffs_.size();
  // Unit-part inversion: with a = z^m (c0 + u1 z + ...), the inverse window
  // has the same length n and lowest exponent -m.
  std::vector<MultiPoly> inv(n, MultiPoly(a.coeff_vars_));
  inv[0] = MultiPoly::constant(a.coeff_vars_, 1 / c0);
  for (size_t k = 1; k < n; ++k) {
    MultiPoly acc(a.coeff_vars_);
    for (size_t j = 0; j < k; ++j)
      acc = acc + inv[j] * a.coeffs_[k - j];
    inv[k] = acc * (Rational(-1) / c0);
  }
  int lowest = -a.lowest_;
  return LaurentSeries::make(a.var_, lowest, std::move(inv),
                             lowest + static_cast<int>(n));
}

MultiPoly residue_coeff(const LaurentSeries& a) {
  if (a.trunc() < 0)
    throw InternalError(
        "residue_coeff: truncation order below 0, coefficient of -1 unknown");
  return a.coeff(-1);
}

}  // namespace liemult
