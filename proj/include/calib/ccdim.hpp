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


#ifndef CALIB_CCDIM_HPP_
#define CALIB_CCDIM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "calib/combinatorics.hpp"
#include "calib/error.hpp"
#include "calib/losses.hpp"
#include "calib/matrix.hpp"
#include "calib/polytope.hpp"
#include "calib/surrogate.hpp"

namespace calib {

// n x (k-1) matrix with columns l_t - l_1.
inline Matrix column_differences(const LossMatrix& L) {
  Matrix d(L.n(), L.k() - 1);
  for (std::size_t y = 0; y < L.n(); ++y)
    for (std::size_t t = 1; t < L.k(); ++t) d(y, t - 1) = L(y, t) - L(y, 0);
  return d;
}

inline std::size_t affine_dim(const LossMatrix& L) {
  if (L.k() == 1) return 0;
  return rank(column_differences(L));
}

struct UpperBound {
  std::size_t affdim = 0;
  std::size_t rank = 0;
  std::size_t value = 0;  // min(affdim, n - 1)
};

inline UpperBound upper_bound(const LossMatrix& L) {
  UpperBound u;
  u.affdim = affine_dim(L);
  u.rank = rank(L.entries());
  u.value = std::min(u.affdim, L.n() - 1);
  return u;
}

struct LowerBoundAt {
  Vector p;
  std::size_t t = 0;  // an argmin prediction
  std::size_t mu = 0;
  std::size_t support = 0;  // ||p||_0
  long raw = 0;  // ||p||_0 - mu - 1, possibly negative
  std::size_t bound = 0;  // max(raw, 0)
};

// ||p||_0 - mu - 1, with mu computed on the trigger set of the loss
// restricted to supp(p). mu is checked to agree across the whole argmin.
inline LowerBoundAt lower_bound_at(const LossMatrix& L, const Vector& p) {
  check_distribution(L, p);
  std::vector<std::size_t> support;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (p[y] != 0) support.push_back(y);
  LossMatrix ls = restrict_rows(L, support);
  Vector ps;
  for (auto y : support) ps.push_back(p[y]);
  auto argmin = bayes_argmin(ls, ps);
  LowerBoundAt r;
  r.p = p;
  r.t = argmin.front();
  r.support = support.size();
  r.mu = feasible_subspace_dim(trigger_set(ls, r.t), ps);
  for (auto t : argmin)
    if (feasible_subspace_dim(trigger_set(ls, t), ps) != r.mu)
      throw std::logic_error("lower_bound_at: feasible subspace dimension differs across argmin");
  r.raw = static_cast<long>(r.support) - static_cast<long>(r.mu) - 1;
  r.bound = r.raw > 0 ? static_cast<std::size_t>(r.raw) : 0;
  return r;
}

inline Vector uniform_distribution(std::size_t n) {
  return Vector(n, Rational(1, static_cast<long>(n)));
}

struct LowerBoundSearch {
  LowerBoundAt best;
  std::size_t candidates = 0;
  // False when some candidate family was skipped for exceeding the budget.
  bool exhaustive = true;
};

// Best lower bound over: the uniform vector, every trigger-set vertex, and
// vertex barycenters of pairwise and triple trigger-set intersections.
inline LowerBoundSearch lower_bound_search(const LossMatrix& L,
                                           std::uint64_t budget_per_enumeration = 20'000) {
  LowerBoundSearch s;
  s.best = lower_bound_at(L, uniform_distribution(L.n()));
  s.candidates = 1;
  auto consider = [&](const Vector& p) {
    ++s.candidates;
    LowerBoundAt r = lower_bound_at(L, p);
    if (r.bound > s.best.bound) s.best = r;
  };
  std::vector<HPolytope> q;
  for (std::size_t t = 0; t < L.k(); ++t) q.push_back(trigger_set(L, t));
  auto verts = [&](const HPolytope& p) -> std::optional<std::vector<Vector>> {
    try {
      return detail::enumerate_vertices(p, budget_per_enumeration);
    } catch (const LimitError&) {
      s.exhaustive = false;
      return std::nullopt;
    }
  };
  auto barycenter = [](const std::vector<Vector>& vs) {
    Vector c(vs[0].size(), Rational(0));
    for (const auto& v : vs)
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[j];
    for (auto& x : c) x /= static_cast<long>(vs.size());
    return c;
  };
  for (const auto& qt : q)
    if (auto vs = verts(qt))
      for (const auto& v : *vs) consider(v);
  for (std::size_t size = 2; size <= 3; ++size) {
    if (binomial(L.k(), size) > budget_per_enumeration) {
      s.exhaustive = false;
      continue;
    }
    for_each_combination(L.k(), size, [&](const std::vector<std::size_t>& ts) {
      HPolytope meet = q[ts[0]];
      for (std::size_t i = 1; i < ts.size(); ++i)
        for (std::size_t r = 0; r < q[ts[i]].num_ineq(); ++r)
          meet.add_inequality(q[ts[i]].ineq_A().row(r), q[ts[i]].ineq_b()[r]);
      if (auto vs = verts(meet); vs && !vs->empty()) consider(barycenter(*vs));
      return true;
    });
  }
  return s;
}

struct Tightness {
  bool holds = false;
  std::optional<Vector> witness;
  // affdim(L) - 1 when `holds` (clamped at 0).
  std::size_t implied_lower = 0;
};

// Is there p in relint(Delta_n) with p.l_t equal for every t?
inline Tightness tightness_check(const LossMatrix& L) {
  Tightness out;
  const std::size_t ad = affine_dim(L);
  auto finish = [&](Vector w) {
    out.holds = true;
    out.witness = std::move(w);
    out.implied_lower = ad > 0 ? ad - 1 : 0;
    return out;
  };
  Vector uni = uniform_distribution(L.n());
  Vector e = expected_losses(L, uni);
  if (std::all_of(e.begin(), e.end(), [&](const Rational& x) { return x == e[0]; }))
    return finish(uni);
  HPolytope p = simplex_polytope(L.n());
  Matrix diff = column_differences(L);
  for (std::size_t t = 0; t + 1 < L.k(); ++t) p.add_equality(diff.column(t), 0);
  if (auto w = strict_interior_point(p)) return finish(*w);
  return out;
}

// Every column is an entry-permutation of column 1.
inline bool permutation_columns_check(const LossMatrix& L) {
  Vector first = L.column(0);
  std::sort(first.begin(), first.end());
  for (std::size_t t = 1; t < L.k(); ++t) {
    Vector c = L.column(t);
    std::sort(c.begin(), c.end());
    if (c != first) return false;
  }
  return true;
}

// psi(u) = M u + l_1 with M's columns the first affdim independent
// differences l_t - l_1 (greedy scan) and anchors solving M u_t = l_t - l_1.
inline LinearEmbedSurrogate construct_embedding_surrogate(const LossMatrix& L) {
  LinearEmbedSurrogate e;
  e.n = L.n();
  const Vector l1 = L.column(0);
  std::vector<Vector> basis;
  std::vector<Vector> diffs;
  for (std::size_t t = 0; t < L.k(); ++t) {
    Vector dv(L.n());
    for (std::size_t y = 0; y < L.n(); ++y) dv[y] = L(y, t) - l1[y];
    diffs.push_back(dv);
    if (t == 0) continue;
    basis.push_back(dv);
    if (rank(Matrix::from_columns(basis, L.n())) < basis.size()) basis.pop_back();
  }
  e.d = basis.size();
  e.map_matrix = Matrix::from_columns(basis, L.n());
  if (e.d == 0) e.map_matrix = Matrix(L.n(), 0);
  e.translation = l1;
  for (auto& x : e.translation) x = -x;
  for (const auto& dv : diffs) {
    if (e.d == 0) {
      e.anchors.push_back(Vector{});
      continue;
    }
    auto u = solve(e.map_matrix, dv);
    if (!u) throw std::logic_error("construct_embedding_surrogate: column outside the span");
    e.anchors.push_back(*u);
  }
  e.domain = hull_from_points(e.anchors, e.d);
  for (std::size_t t = 0; t < L.k(); ++t)
    if (linear_embed_evaluate(e, e.anchors[t]) != L.column(t))
      throw std::logic_error("construct_embedding_surrogate: anchor does not reproduce its column");
  return e;
}

struct CCDimReport {
  std::size_t n = 0, k = 0;
  std::size_t affdim = 0, rank = 0;
  std::size_t upper_bound = 0;
  // Best lower bound found: max of the searched bound and the tightness
  // bound. Not claimed to be CCdim itself.
  std::size_t lower_bound = 0;
  LowerBoundAt lower_witness;
  std::size_t candidates = 0;
  bool exhaustive = true;
  Tightness tightness;
  bool perm_columns = false;
};

struct AnalyzeOptions {
  bool search = true;  // false: only the uniform vector is tried
  std::uint64_t budget_per_enumeration = 20'000;
};

inline CCDimReport analyze(const LossMatrix& L, const AnalyzeOptions& opt = {}) {
  CCDimReport r;
  r.n = L.n();
  r.k = L.k();
  UpperBound ub = upper_bound(L);
  r.affdim = ub.affdim;
  r.rank = ub.rank;
  r.upper_bound = ub.value;
  if (opt.search) {
    LowerBoundSearch s = lower_bound_search(L, opt.budget_per_enumeration);
    r.lower_witness = s.best;
    r.candidates = s.candidates;
    r.exhaustive = s.exhaustive;
  } else {
    r.lower_witness = lower_bound_at(L, uniform_distribution(L.n()));
    r.candidates = 1;
    r.exhaustive = false;
  }
  r.tightness = tightness_check(L);
  r.perm_columns = permutation_columns_check(L);
  r.lower_bound = std::max(r.lower_witness.bound, r.tightness.implied_lower);
  return r;
}

}  // namespace calib

#endif  // CALIB_CCDIM_HPP_
