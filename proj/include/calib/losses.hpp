/*
 * Copyright 2026 The calibdim Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef CALIB_LOSSES_HPP_
#define CALIB_LOSSES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calib/error.hpp"
#include "calib/matrix.hpp"
#include "calib/polytope.hpp"
#include "calib/rational.hpp"

namespace calib {

// n x k loss matrix: entry (y, t) is the loss of predicting t under label y.
// Labels and predictions are 0-based here; reports shift to 1-based.
//
// `sign_relaxed` permits negative entries for row-shifted variants whose
// calibration geometry is unchanged by a per-row constant.
class LossMatrix {
 public:
  LossMatrix() = default;
  explicit LossMatrix(Matrix entries, std::vector<std::string> row_labels = {},
                      std::vector<std::string> col_labels = {}, bool sign_relaxed = false)
      : entries_(std::move(entries)),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)),
        sign_relaxed_(sign_relaxed) {
    if (entries_.rows() == 0 || entries_.cols() == 0)
      throw InputError("loss matrix must have at least one row and one column");
    if (!row_labels_.empty() && row_labels_.size() != entries_.rows())
      throw InputError("row_labels length does not match n");
    if (!col_labels_.empty() && col_labels_.size() != entries_.cols())
      throw InputError("col_labels length does not match k");
    if (!sign_relaxed_)
      for (std::size_t y = 0; y < n(); ++y)
        for (std::size_t t = 0; t < k(); ++t)
          if (entries_(y, t) < 0) throw InputError("loss matrix has a negative entry");
  }

  std::size_t n() const { return entries_.rows(); }
  std::size_t k() const { return entries_.cols(); }
  const Matrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t y, std::size_t t) const { return entries_(y, t); }
  Vector column(std::size_t t) const { return entries_.column(t); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  bool sign_relaxed() const { return sign_relaxed_; }

  const std::string& name() const { return name_; }
  LossMatrix& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

 private:
  Matrix entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  bool sign_relaxed_ = false;
  std::string name_;
};

inline std::vector<std::string> index_labels(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::to_string(i));
  return out;
}

inline LossMatrix zero_one(std::size_t n) {
  if (n == 0) throw InputError("zero_one: n must be >= 1");
  Matrix m(n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t t = 0; t < n; ++t) m(y, t) = y == t ? 0 : 1;
  return LossMatrix(m, index_labels(n), index_labels(n)).set_name("zero_one");
}

inline LossMatrix ordinal(std::size_t n) {
  if (n == 0) throw InputError("ordinal: n must be >= 1");
  Matrix m(n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t t = 0; t < n; ++t) m(y, t) = static_cast<long>(y > t ? y - t : t - y);
  return LossMatrix(m, index_labels(n), index_labels(n)).set_name("ordinal");
}

inline LossMatrix hamming(std::size_t r) {
  if (r == 0) throw InputError("hamming: r must be >= 1");
  if (r > 6) throw LimitError("hamming: r > 6 exceeds the size cap");
  const std::size_t n = std::size_t{1} << r;
  Matrix m(n, n);
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < n; ++y) {
    std::string bits;
    for (std::size_t b = r; b > 0; --b) bits += ((y >> (b - 1)) & 1) ? '1' : '0';
    labels.push_back(bits);
    for (std::size_t t = 0; t < n; ++t) m(y, t) = static_cast<long>(__builtin_popcountll(y ^ t));
  }
  return LossMatrix(m, labels, labels).set_name("hamming");
}

// n classes plus an abstain column of cost 1/2.
inline LossMatrix abstain(std::size_t n) {
  if (n == 0) throw InputError("abstain: n must be >= 1");
  Matrix m(n, n + 1);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t t = 0; t < n; ++t) m(y, t) = y == t ? 0 : 1;
    m(y, n) = Rational(1, 2);
  }
  auto cols = index_labels(n);
  cols.push_back("?");
  return LossMatrix(m, index_labels(n), cols).set_name("abstain");
}

inline void check_distribution(const LossMatrix& L, std::span<const Rational> p) {
  if (p.size() != L.n()) throw InputError("probability vector has wrong length");
  Rational total = 0;
  for (const auto& x : p) {
    if (x < 0) throw InputError("probability vector has a negative entry");
    total += x;
  }
  if (total != 1) throw InputError("probability vector does not sum to 1");
}

inline Vector expected_losses(const LossMatrix& L, std::span<const Rational> p) {
  check_distribution(L, p);
  Vector out(L.k(), Rational(0));
  for (std::size_t y = 0; y < L.n(); ++y) {
    if (p[y] == 0) continue;
    for (std::size_t t = 0; t < L.k(); ++t) out[t] += p[y] * L(y, t);
  }
  return out;
}

inline std::vector<std::size_t> bayes_argmin(const LossMatrix& L, std::span<const Rational> p) {
  Vector e = expected_losses(L, p);
  Rational best = e[0];
  for (const auto& x : e) best = std::min<Rational>(best, x);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < e.size(); ++t)
    if (e[t] == best) out.push_back(t);
  return out;
}

inline Rational regret(const LossMatrix& L, std::span<const Rational> p, std::size_t t) {
  if (t >= L.k()) throw InputError("regret: prediction index out of range");
  Vector e = expected_losses(L, p);
  Rational best = e[0];
  for (const auto& x : e) best = std::min<Rational>(best, x);
  return e[t] - best;
}

// {p in Delta_n : p.(l_t - l_t') <= 0 for all t' != t}. Rows that vanish
// identically (duplicate columns) are dropped.
inline HPolytope trigger_set(const LossMatrix& L, std::size_t t) {
  if (t >= L.k()) throw InputError("trigger_set: prediction index out of range");
  HPolytope q = simplex_polytope(L.n());
  for (std::size_t s = 0; s < L.k(); ++s) {
    if (s == t) continue;
    Vector row(L.n());
    bool nonzero = false;
    for (std::size_t y = 0; y < L.n(); ++y) {
      row[y] = L(y, t) - L(y, s);
      nonzero = nonzero || row[y] != 0;
    }
    if (nonzero) q.add_inequality(row, 0);
  }
  return q;
}

struct ColumnVerdict {
  bool valid = false;
  // Probability at which the column is the unique minimizer.
  std::optional<Vector> witness;
};

// Column t is useful iff some p makes it the strict unique argmin.
inline std::vector<ColumnVerdict> validate_columns(const LossMatrix& L) {
  std::vector<ColumnVerdict> out;
  for (std::size_t t = 0; t < L.k(); ++t) {
    HPolytope q = simplex_polytope(L.n());
    std::vector<std::size_t> strict;
    for (std::size_t s = 0; s < L.k(); ++s) {
      if (s == t) continue;
      Vector row(L.n());
      for (std::size_t y = 0; y < L.n(); ++y) row[y] = L(y, t) - L(y, s);
      strict.push_back(q.num_ineq());
      q.add_inequality(row, 0);
    }
    ColumnVerdict v;
    v.witness = strict_interior_point(q, strict);
    v.valid = v.witness.has_value();
    out.push_back(std::move(v));
  }
  return out;
}

// Rows restricted to `support` (used for the boundary case of the lower bound).
inline LossMatrix restrict_rows(const LossMatrix& L, const std::vector<std::size_t>& support) {
  Matrix m(support.size(), L.k());
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t t = 0; t < L.k(); ++t) m(i, t) = L(support[i], t);
    if (!L.row_labels().empty()) rows.push_back(L.row_labels()[support[i]]);
  }
  return LossMatrix(m, rows, L.col_labels(), L.sign_relaxed());
}

}  // namespace calib

#endif  // CALIB_LOSSES_HPP_
