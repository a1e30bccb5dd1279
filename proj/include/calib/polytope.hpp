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


#ifndef CALIB_POLYTOPE_HPP_
#define CALIB_POLYTOPE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calib/combinatorics.hpp"
#include "calib/error.hpp"
#include "calib/matrix.hpp"
#include "calib/rational.hpp"

namespace calib {

class HPolytope;
const std::vector<Vector>& vertices(const HPolytope& p);

// {x in R^dim : ineq_A x <= ineq_b, eq_A x = eq_b}.
class HPolytope {
 public:
  explicit HPolytope(std::size_t dim = 0)
      : dim_(dim), ineq_A_(0, dim), eq_A_(0, dim), cache_(std::make_shared<Cache>()) {}

  HPolytope(Matrix ineq_A, Vector ineq_b, Matrix eq_A, Vector eq_b)
      : dim_(ineq_A.cols()),
        ineq_A_(std::move(ineq_A)),
        ineq_b_(std::move(ineq_b)),
        eq_A_(std::move(eq_A)),
        eq_b_(std::move(eq_b)),
        cache_(std::make_shared<Cache>()) {
    if (eq_A_.rows() == 0 && eq_A_.cols() == 0) eq_A_ = Matrix(0, dim_);
    if (ineq_A_.rows() == 0 && ineq_A_.cols() == 0 && eq_A_.cols() != 0) {
      dim_ = eq_A_.cols();
      ineq_A_ = Matrix(0, dim_);
    }
    if (eq_A_.cols() != dim_) throw std::invalid_argument("HPolytope: width mismatch");
    if (ineq_b_.size() != ineq_A_.rows() || eq_b_.size() != eq_A_.rows())
      throw std::invalid_argument("HPolytope: rhs length mismatch");
  }

  std::size_t dim() const { return dim_; }
  const Matrix& ineq_A() const { return ineq_A_; }
  const Vector& ineq_b() const { return ineq_b_; }
  const Matrix& eq_A() const { return eq_A_; }
  const Vector& eq_b() const { return eq_b_; }
  std::size_t num_ineq() const { return ineq_A_.rows(); }
  std::size_t num_eq() const { return eq_A_.rows(); }

  void add_inequality(std::span<const Rational> a, const Rational& b) {
    check_width(a);
    ineq_A_.append_row(a);
    ineq_b_.push_back(b);
    cache_ = std::make_shared<Cache>();
  }
  void add_equality(std::span<const Rational> a, const Rational& b) {
    check_width(a);
    eq_A_.append_row(a);
    eq_b_.push_back(b);
    cache_ = std::make_shared<Cache>();
  }
  // a x >= b, stored as -a x <= -b.
  void add_lower_bound(std::span<const Rational> a, const Rational& b) {
    Vector neg(a.begin(), a.end());
    for (auto& x : neg) x = -x;
    add_inequality(neg, -b);
  }

 private:
  friend const std::vector<Vector>& vertices(const HPolytope& p);

  struct Cache {
    std::once_flag once;
    std::vector<Vector> vertices;
  };

  void check_width(std::span<const Rational> a) const {
    if (a.size() != dim_) throw std::invalid_argument("HPolytope: row width mismatch");
  }

  std::size_t dim_;
  Matrix ineq_A_;
  Vector ineq_b_;
  Matrix eq_A_;
  Vector eq_b_;
  // Shared by copies; replaced (never mutated) when constraints change.
  std::shared_ptr<Cache> cache_;
};

inline HPolytope simplex_polytope(std::size_t n) {
  if (n == 0) throw std::invalid_argument("simplex_polytope: n must be >= 1");
  HPolytope p(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n, Rational(0));
    row[i] = -1;
    p.add_inequality(row, 0);
  }
  p.add_equality(Vector(n, Rational(1)), 1);
  return p;
}

inline bool contains_point(const HPolytope& p, std::span<const Rational> q) {
  if (q.size() != p.dim()) throw std::invalid_argument("contains_point: dimension mismatch");
  for (std::size_t i = 0; i < p.num_ineq(); ++i)
    if (dot(p.ineq_A().row(i), q) > p.ineq_b()[i]) return false;
  for (std::size_t i = 0; i < p.num_eq(); ++i)
    if (dot(p.eq_A().row(i), q) != p.eq_b()[i]) return false;
  return true;
}
inline bool contains_point(const HPolytope& p, const Vector& q) {
  return contains_point(p, std::span<const Rational>(q));
}

enum class LPStatus { kFeasible, kInfeasible, kUnbounded };
enum class Sense { kMinimize, kMaximize };

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  std::optional<Rational> optimum;
  std::optional<Vector> witness;
};

namespace detail {

// Dense two-phase simplex for  min c.z  s.t.  M z = h, z >= 0, with Bland's
// rule for both entering and leaving choices.
class StandardSimplex {
 public:
  StandardSimplex(const Matrix& M, const Vector& h, const Vector& c)
      : m_(M.rows()), n_(M.cols()), c_(c) {
    width_ = n_ + m_ + 1;
    tab_.assign(m_, Vector(width_, Rational(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = h[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = flip ? Rational(-M(i, j)) : M(i, j);
      tab_[i][n_ + i] = 1;
      tab_[i][width_ - 1] = flip ? Rational(-h[i]) : h[i];
      basis_[i] = n_ + i;
    }
  }

  LPResult run() {
    LPResult res;
    // Phase 1: minimize the sum of artificials.
    obj_.assign(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) obj_[j] -= tab_[i][j];
    for (std::size_t i = 0; i < m_; ++i) obj_[width_ - 1] -= tab_[i][width_ - 1];
    iterate(width_ - 1);
    if (obj_[width_ - 1] != 0) {
      res.status = LPStatus::kInfeasible;
      return res;
    }
    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && tab_[i][j] == 0) ++j;
      if (j < n_) {
        pivot(i, j);
        ++i;
      } else {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    // Phase 2.
    obj_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = c_[j];
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      const Rational cb = c_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (j < n_ || j == width_ - 1) obj_[j] -= cb * tab_[i][j];
    }
    if (!iterate(n_)) {
      res.status = LPStatus::kUnbounded;
      return res;
    }
    Vector z(n_, Rational(0));
    for (std::size_t i = 0; i < tab_.size(); ++i) z[basis_[i]] = tab_[i][width_ - 1];
    res.status = LPStatus::kFeasible;
    res.optimum = Rational(-obj_[width_ - 1]);
    res.witness = std::move(z);
    return res;
  }

 private:
  // Columns [0, limit) may enter. Returns false on unboundedness.
  bool iterate(std::size_t limit) {
    while (true) {
      std::size_t e = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj_[j] < 0) {
          e = j;
          break;
        }
      if (e == limit) return true;
      std::size_t leave = tab_.size();
      Rational best;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][e] <= 0) continue;
        Rational ratio = tab_[i][width_ - 1] / tab_[i][e];
        if (leave == tab_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == tab_.size()) return false;
      pivot(leave, e);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / tab_[r][c];
    for (auto& x : tab_[r]) x *= inv;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      Rational f = tab_[i][c];
      for (std::size_t j = 0; j < width_; ++j)
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
    }
    if (obj_.size() == width_ && obj_[c] != 0) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j < width_; ++j)
        if (tab_[r][j] != 0) obj_[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_ = 0;
  Vector c_;
  std::vector<Vector> tab_;
  Vector obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// Exact LP over P with free variables (split as x = x+ - x-).
inline LPResult lp(std::span<const Rational> objective, const HPolytope& p,
                   Sense sense = Sense::kMinimize) {
  const std::size_t d = p.dim();
  if (objective.size() != d) throw std::invalid_argument("lp: objective length mismatch");
  const std::size_t mi = p.num_ineq(), me = p.num_eq();
  const std::size_t cols = 2 * d + mi;
  Matrix M(mi + me, cols);
  Vector h(mi + me);
  for (std::size_t i = 0; i < mi; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      M(i, j) = p.ineq_A()(i, j);
      M(i, d + j) = -p.ineq_A()(i, j);
    }
    M(i, 2 * d + i) = 1;
    h[i] = p.ineq_b()[i];
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      M(mi + i, j) = p.eq_A()(i, j);
      M(mi + i, d + j) = -p.eq_A()(i, j);
    }
    h[mi + i] = p.eq_b()[i];
  }
  Vector c(cols, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = sense == Sense::kMinimize ? objective[j] : Rational(-objective[j]);
    c[d + j] = -c[j];
  }
  LPResult std_res = detail::StandardSimplex(M, h, c).run();
  LPResult res;
  res.status = std_res.status;
  if (std_res.status != LPStatus::kFeasible) return res;
  Vector x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = (*std_res.witness)[j] - (*std_res.witness)[d + j];
  res.optimum = sense == Sense::kMinimize ? *std_res.optimum : Rational(-*std_res.optimum);
  res.witness = std::move(x);
  return res;
}
inline LPResult lp(const Vector& objective, const HPolytope& p, Sense sense = Sense::kMinimize) {
  return lp(std::span<const Rational>(objective), p, sense);
}

inline bool is_feasible(const HPolytope& p) {
  return lp(Vector(p.dim(), Rational(0)), p).status == LPStatus::kFeasible;
}

// True if P is empty or bounded along every coordinate.
inline bool is_bounded(const HPolytope& p) {
  for (std::size_t j = 0; j < p.dim(); ++j) {
    Vector e(p.dim(), Rational(0));
    e[j] = 1;
    for (Sense s : {Sense::kMinimize, Sense::kMaximize}) {
      LPStatus st = lp(e, p, s).status;
      if (st == LPStatus::kInfeasible) return true;
      if (st == LPStatus::kUnbounded) return false;
    }
  }
  return true;
}

// Upper limit on the number of constraint subsets vertex enumeration may
// visit before giving up with LimitError.
inline constexpr std::uint64_t kVertexEnumerationBudget = 2'000'000;

namespace detail {

inline bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<Vector>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Basic solutions: the equality subspace is parametrized as x0 + N y, then
// every f-subset of inequality rows (f = dim y) is tried as an active set.
inline std::vector<Vector> enumerate_vertices(
    const HPolytope& p, std::uint64_t budget = kVertexEnumerationBudget) {
  const std::size_t d = p.dim();
  std::vector<Vector> out;
  Vector x0(d, Rational(0));
  std::vector<Vector> nb;
  if (p.num_eq() > 0) {
    auto sol = solve(p.eq_A(), p.eq_b());
    if (!sol) return out;
    x0 = *sol;
    nb = null_space_basis(p.eq_A());
  } else {
    for (std::size_t j = 0; j < d; ++j) {
      Vector e(d, Rational(0));
      e[j] = 1;
      nb.push_back(std::move(e));
    }
  }
  const std::size_t f = nb.size();
  const std::size_t m = p.num_ineq();
  // Reduced rows: (A N) y <= b - A x0.
  Matrix R(m, f);
  Vector g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < f; ++k) R(i, k) = dot(p.ineq_A().row(i), nb[k]);
    g[i] = p.ineq_b()[i] - dot(p.ineq_A().row(i), x0);
  }
  auto lift = [&](const Vector& y) {
    Vector x = x0;
    for (std::size_t k = 0; k < f; ++k)
      if (y[k] != 0)
        for (std::size_t j = 0; j < d; ++j) x[j] += y[k] * nb[k][j];
    return x;
  };
  auto feasible = [&](const Vector& y) {
    for (std::size_t i = 0; i < m; ++i)
      if (dot(R.row(i), y) > g[i]) return false;
    return true;
  };
  if (f == 0) {
    Vector y;
    if (feasible(y)) out.push_back(x0);
    return out;
  }
  if (binomial(m, f) > budget)
    throw LimitError("vertex enumeration exceeds budget (" + std::to_string(m) +
                     " rows, dimension " + std::to_string(f) + ")");
  for_each_combination(m, f, [&](const std::vector<std::size_t>& rows) {
    Matrix S(f, f);
    Vector rhs(f);
    for (std::size_t a = 0; a < f; ++a) {
      for (std::size_t k = 0; k < f; ++k) S(a, k) = R(rows[a], k);
      rhs[a] = g[rows[a]];
    }
    auto red = rref(S);
    if (red.pivots.size() != f) return true;
    auto y = solve(S, rhs);
    if (y && feasible(*y)) out.push_back(lift(*y));
    return true;
  });
  sort_unique(out);
  return out;
}

}  // namespace detail

// Exact vertex list, deduplicated and lexicographically sorted. Throws
// LimitError for unbounded input.
inline const std::vector<Vector>& vertices(const HPolytope& p) {
  auto cache = p.cache_;
  std::call_once(cache->once, [&] {
    if (!is_bounded(p)) throw LimitError("vertices: polyhedron is unbounded");
    cache->vertices = detail::enumerate_vertices(p);
  });
  return cache->vertices;
}

// Every vertex of q satisfies p's constraints.
inline bool contains_polytope(const HPolytope& p, const HPolytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("contains_polytope: dimension mismatch");
  for (const auto& v : vertices(q))
    if (!contains_point(p, v)) return false;
  return true;
}

inline bool equals_polytope(const HPolytope& p, const HPolytope& q) {
  return contains_polytope(p, q) && contains_polytope(q, p);
}

// Maximizes eps <= 1 with  a_i x + eps <= b_i  for the selected rows; returns
// a point iff the optimum is positive.
inline std::optional<Vector> strict_interior_point(const HPolytope& p,
                                                   const std::vector<std::size_t>& strict_rows) {
  const std::size_t d = p.dim();
  std::vector<bool> strict(p.num_ineq(), false);
  for (auto r : strict_rows) {
    if (r >= p.num_ineq()) throw std::invalid_argument("strict_interior_point: bad row");
    strict[r] = true;
  }
  HPolytope lifted(d + 1);
  for (std::size_t i = 0; i < p.num_ineq(); ++i) {
    Vector row(p.ineq_A().row(i).begin(), p.ineq_A().row(i).end());
    row.push_back(strict[i] ? Rational(1) : Rational(0));
    lifted.add_inequality(row, p.ineq_b()[i]);
  }
  for (std::size_t i = 0; i < p.num_eq(); ++i) {
    Vector row(p.eq_A().row(i).begin(), p.eq_A().row(i).end());
    row.push_back(0);
    lifted.add_equality(row, p.eq_b()[i]);
  }
  Vector cap(d + 1, Rational(0));
  cap[d] = 1;
  lifted.add_inequality(cap, 1);
  LPResult r = lp(cap, lifted, Sense::kMaximize);
  if (r.status != LPStatus::kFeasible || *r.optimum <= 0) return std::nullopt;
  Vector x(r.witness->begin(), r.witness->begin() + static_cast<std::ptrdiff_t>(d));
  return x;
}

// All inequality rows strict.
inline std::optional<Vector> strict_interior_point(const HPolytope& p) {
  std::vector<std::size_t> rows(p.num_ineq());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return strict_interior_point(p, rows);
}

// Dimension of the smallest face of P containing x: nullity of the active
// inequality rows stacked with the equality rows.
inline std::size_t feasible_subspace_dim(const HPolytope& p, std::span<const Rational> x) {
  if (!contains_point(p, x)) throw InputError("feasible_subspace_dim: point not in polytope");
  Matrix stack(0, p.dim());
  for (std::size_t i = 0; i < p.num_ineq(); ++i)
    if (dot(p.ineq_A().row(i), x) == p.ineq_b()[i]) stack.append_row(p.ineq_A().row(i));
  for (std::size_t i = 0; i < p.num_eq(); ++i) stack.append_row(p.eq_A().row(i));
  return nullity(stack);
}
inline std::size_t feasible_subspace_dim(const HPolytope& p, const Vector& x) {
  return feasible_subspace_dim(p, std::span<const Rational>(x));
}

// Dimension of the affine hull of a point set (-1 for the empty set).
inline long affine_hull_dim(const std::vector<Vector>& pts) {
  if (pts.empty()) return -1;
  Matrix diff(0, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vector r(pts[0].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    diff.append_row(r);
  }
  return static_cast<long>(rank(diff));
}

inline long polytope_dim(const HPolytope& p) { return affine_hull_dim(vertices(p)); }

// H-representation of conv(points). Equalities describe the affine hull;
// facets are found among hyperplanes through a-subsets of points in a
// coordinate chart of that hull (a = hull dimension).
inline HPolytope hull_from_points(std::vector<Vector> pts, std::size_t dim) {
  for (const auto& v : pts)
    if (v.size() != dim) throw std::invalid_argument("hull_from_points: dimension mismatch");
  detail::sort_unique(pts);
  HPolytope out(dim);
  if (pts.empty()) {
    out.add_inequality(Vector(dim, Rational(0)), -1);
    return out;
  }
  const Vector& p0 = pts[0];
  Matrix diff(0, dim);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vector r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = pts[i][j] - p0[j];
    diff.append_row(r);
  }
  auto normals = null_space_basis(diff);
  for (auto& nv : normals) out.add_equality(nv, dot(nv, p0));
  auto chart = rref(diff).pivots;
  const std::size_t a = chart.size();
  if (a == 0) return out;

  std::vector<Vector> ys;
  for (const auto& v : pts) {
    Vector y(a);
    for (std::size_t k = 0; k < a; ++k) y[k] = v[chart[k]];
    ys.push_back(std::move(y));
  }
  std::vector<Vector> facets;  // (h_1..h_a, g) with h.y <= g
  if (binomial(ys.size(), a) > kVertexEnumerationBudget)
    throw LimitError("hull_from_points: facet enumeration exceeds budget");
  for_each_combination(ys.size(), a, [&](const std::vector<std::size_t>& idx) {
    // Hyperplane h.y - g = 0 through the chosen points.
    Matrix S(a, a + 1);
    for (std::size_t r = 0; r < a; ++r) {
      for (std::size_t k = 0; k < a; ++k) S(r, k) = ys[idx[r]][k];
      S(r, a) = -1;
    }
    auto ns = null_space_basis(S);
    if (ns.size() != 1) return true;
    Vector hg = ns[0];
    bool any_h = false;
    for (std::size_t k = 0; k < a; ++k) any_h = any_h || hg[k] != 0;
    if (!any_h) return true;
    int side = 0;
    for (const auto& y : ys) {
      Rational val = Rational(0);
      for (std::size_t k = 0; k < a; ++k) val += hg[k] * y[k];
      val -= hg[a];
      int sgn = ::sgn(val);
      if (sgn == 0) continue;
      if (side == 0) side = sgn;
      else if (side != sgn) return true;
    }
    if (side == 0) return true;
    if (side > 0)
      for (auto& x : hg) x = -x;
    // Scale so the first nonzero normal entry has magnitude 1.
    Rational s;
    for (std::size_t k = 0; k < a; ++k)
      if (hg[k] != 0) {
        s = abs(hg[k]);
        break;
      }
    for (auto& x : hg) x /= s;
    facets.push_back(std::move(hg));
    return true;
  });
  detail::sort_unique(facets);
  for (const auto& hg : facets) {
    Vector row(dim, Rational(0));
    for (std::size_t k = 0; k < a; ++k) row[chart[k]] = hg[k];
    out.add_inequality(row, hg[a]);
  }
  return out;
}

// Witness point in the relative interior of `target` that no piece covers,
// or nullopt when the union of `pieces` contains `target` up to a set of
// measure zero inside aff(target). Pieces are closed, so "up to measure
// zero" is the same as full coverage.
inline std::optional<Vector> uncovered_point(const HPolytope& target,
                                             const std::vector<HPolytope>& pieces) {
  const long full = polytope_dim(target);
  std::vector<const HPolytope*> fat;
  for (const auto& pc : pieces)
    if (pc.dim() == target.dim() && polytope_dim(pc) == full) fat.push_back(&pc);

  auto relint = [&](const HPolytope& cell) -> std::optional<Vector> {
    if (polytope_dim(cell) != full) return std::nullopt;
    // Centroid of the vertices lies in the relative interior.
    const auto& vs = vertices(cell);
    Vector c(cell.dim(), Rational(0));
    for (const auto& v : vs)
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[j];
    for (auto& x : c) x /= static_cast<long>(vs.size());
    return c;
  };

  std::function<std::optional<Vector>(const HPolytope&, std::size_t)> rec =
      [&](const HPolytope& cell, std::size_t j) -> std::optional<Vector> {
    auto inside = relint(cell);
    if (!inside) return std::nullopt;
    if (j == fat.size()) return inside;
    const HPolytope& pc = *fat[j];
    if (contains_polytope(pc, cell)) return std::nullopt;
    HPolytope rest = cell;
    for (std::size_t i = 0; i < pc.num_ineq(); ++i) {
      HPolytope outside = rest;
      outside.add_lower_bound(pc.ineq_A().row(i), pc.ineq_b()[i]);
      if (auto w = rec(outside, j + 1)) return w;
      rest.add_inequality(pc.ineq_A().row(i), pc.ineq_b()[i]);
    }
    return std::nullopt;
  };
  return rec(target, 0);
}

}  // namespace calib

#endif  // CALIB_POLYTOPE_HPP_
