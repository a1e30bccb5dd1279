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


#ifndef CALIB_SURROGATE_HPP_
#define CALIB_SURROGATE_HPP_

#include <algorithm>
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

struct AffinePiece {
  Vector w;
  Rational c;
};

enum class SurrogateFamily { kGeneric, kCrammerSinger, kAbsolute, kEpsInsensitive, kEmbedding };

// psi_y(u) = max over pieces of (w.u + c), on `domain` (nullopt = all of R^d).
class PLSurrogate {
 public:
  PLSurrogate(std::size_t n, std::size_t d, std::vector<std::vector<AffinePiece>> components,
              std::optional<HPolytope> domain = std::nullopt,
              SurrogateFamily family = SurrogateFamily::kGeneric)
      : n_(n), d_(d), components_(std::move(components)), domain_(std::move(domain)),
        family_(family) {
    if (components_.size() != n_) throw InputError("surrogate: need one component per label");
    for (const auto& comp : components_) {
      if (comp.empty()) throw InputError("surrogate: component without pieces");
      for (const auto& pc : comp)
        if (pc.w.size() != d_) throw InputError("surrogate: piece gradient has wrong length");
    }
    if (domain_ && domain_->dim() != d_) throw InputError("surrogate: domain dimension mismatch");
  }

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  const std::vector<std::vector<AffinePiece>>& components() const { return components_; }
  const std::optional<HPolytope>& domain() const { return domain_; }
  SurrogateFamily family() const { return family_; }

  const std::string& name() const { return name_; }
  PLSurrogate& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

 private:
  std::size_t n_, d_;
  std::vector<std::vector<AffinePiece>> components_;
  std::optional<HPolytope> domain_;
  SurrogateFamily family_;
  std::string name_;
};

inline PLSurrogate crammer_singer(std::size_t n) {
  if (n < 2) throw InputError("crammer_singer: n must be >= 2");
  std::vector<std::vector<AffinePiece>> comps(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t o = 0; o < n; ++o) {
      if (o == y) continue;
      Vector w(n, Rational(0));
      w[y] = -1;
      w[o] = 1;
      comps[y].push_back({w, 1});
    }
    comps[y].push_back({Vector(n, Rational(0)), 0});
  }
  return PLSurrogate(n, n, comps, std::nullopt, SurrogateFamily::kCrammerSinger)
      .set_name("crammer_singer");
}

// psi_y(u) = |u - y| with labels 1..n on the real line.
inline PLSurrogate absolute(std::size_t n) {
  if (n == 0) throw InputError("absolute: n must be >= 1");
  std::vector<std::vector<AffinePiece>> comps(n);
  for (std::size_t y = 0; y < n; ++y) {
    const long label = static_cast<long>(y + 1);
    comps[y] = {{Vector{Rational(1)}, Rational(-label)}, {Vector{Rational(-1)}, Rational(label)}};
  }
  return PLSurrogate(n, 1, comps, std::nullopt, SurrogateFamily::kAbsolute).set_name("absolute");
}

// psi_y(u) = (|u - y| - eps)_+.
inline PLSurrogate eps_insensitive(std::size_t n, const Rational& eps) {
  if (n == 0) throw InputError("eps_insensitive: n must be >= 1");
  if (eps < 0 || eps >= Rational(1, 2)) throw InputError("eps_insensitive: eps must be in [0, 1/2)");
  std::vector<std::vector<AffinePiece>> comps(n);
  for (std::size_t y = 0; y < n; ++y) {
    const Rational label(static_cast<long>(y + 1));
    comps[y] = {{Vector{Rational(1)}, Rational(-label - eps)},
                {Vector{Rational(-1)}, Rational(label - eps)},
                {Vector{Rational(0)}, Rational(0)}};
  }
  return PLSurrogate(n, 1, comps, std::nullopt, SurrogateFamily::kEpsInsensitive)
      .set_name("eps_insensitive");
}

inline void check_domain(const PLSurrogate& s, std::span<const Rational> u) {
  if (u.size() != s.d()) throw InputError("surrogate point has wrong dimension");
  if (s.domain() && !contains_point(*s.domain(), u))
    throw InputError("surrogate point " + to_string(u) + " lies outside the domain");
}

inline Rational component_value(const PLSurrogate& s, std::size_t y, std::span<const Rational> u) {
  const auto& comp = s.components()[y];
  Rational best = dot(comp[0].w, u) + comp[0].c;
  for (std::size_t i = 1; i < comp.size(); ++i)
    best = std::max<Rational>(best, dot(comp[i].w, u) + comp[i].c);
  return best;
}

inline Vector evaluate(const PLSurrogate& s, std::span<const Rational> u) {
  check_domain(s, u);
  Vector z(s.n());
  for (std::size_t y = 0; y < s.n(); ++y) z[y] = component_value(s, y, u);
  return z;
}
inline Vector evaluate(const PLSurrogate& s, const Vector& u) {
  return evaluate(s, std::span<const Rational>(u));
}

// Indices of pieces attaining the max of psi_y at u.
inline std::vector<std::size_t> active_pieces(const PLSurrogate& s, std::size_t y,
                                              std::span<const Rational> u) {
  const Rational best = component_value(s, y, u);
  std::vector<std::size_t> out;
  const auto& comp = s.components()[y];
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (dot(comp[i].w, u) + comp[i].c == best) out.push_back(i);
  return out;
}

// Distinct gradients of the active pieces; their hull is the subdifferential.
inline std::vector<Vector> subdifferential_vertices(const PLSurrogate& s, std::size_t y,
                                                    std::span<const Rational> u) {
  if (y >= s.n()) throw InputError("subdifferential_vertices: label out of range");
  check_domain(s, u);
  std::vector<Vector> out;
  for (auto i : active_pieces(s, y, u)) out.push_back(s.components()[y][i].w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
inline std::vector<Vector> subdifferential_vertices(const PLSurrogate& s, std::size_t y,
                                                    const Vector& u) {
  return subdifferential_vertices(s, y, std::span<const Rational>(u));
}

struct NormalSetResult {
  Vector u;
  Vector z;
  Matrix A;  // d x s active gradients
  Matrix B;  // n x s label indicators
  Matrix G;  // d x g generators of the domain normal cone at u (empty when free)
  HPolytope polytope;
  std::vector<Vector> vertices;
};

namespace detail {

// Generators of the normal cone of the domain at u: active inequality
// normals and both signs of every equality normal.
inline std::vector<Vector> normal_cone_generators(const PLSurrogate& s,
                                                  std::span<const Rational> u) {
  std::vector<Vector> gens;
  if (!s.domain()) return gens;
  const HPolytope& c = *s.domain();
  for (std::size_t i = 0; i < c.num_ineq(); ++i)
    if (dot(c.ineq_A().row(i), u) == c.ineq_b()[i]) gens.push_back(c.ineq_A().row_vector(i));
  for (std::size_t i = 0; i < c.num_eq(); ++i) {
    Vector g = c.eq_A().row_vector(i);
    gens.push_back(g);
    for (auto& x : g) x = -x;
    gens.push_back(std::move(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

// {(q, lambda) : q in Delta_s, lambda >= 0, A q + G lambda = 0}, optionally
// with B q = p appended.
inline HPolytope lifted_system(const Matrix& A, const Matrix& B, const Matrix& G,
                               const Vector* p) {
  const std::size_t s = A.cols(), g = G.cols(), d = A.rows();
  HPolytope sys(s + g);
  for (std::size_t j = 0; j < s + g; ++j) {
    Vector e(s + g, Rational(0));
    e[j] = -1;
    sys.add_inequality(e, 0);
  }
  Vector ones(s + g, Rational(0));
  for (std::size_t j = 0; j < s; ++j) ones[j] = 1;
  sys.add_equality(ones, 1);
  for (std::size_t i = 0; i < d; ++i) {
    Vector row(s + g, Rational(0));
    for (std::size_t j = 0; j < s; ++j) row[j] = A(i, j);
    for (std::size_t j = 0; j < g; ++j) row[s + j] = G(i, j);
    sys.add_equality(row, 0);
  }
  if (p) {
    for (std::size_t y = 0; y < B.rows(); ++y) {
      Vector row(s + g, Rational(0));
      for (std::size_t j = 0; j < s; ++j) row[j] = B(y, j);
      sys.add_equality(row, (*p)[y]);
    }
  }
  return sys;
}

inline void assemble(const PLSurrogate& s, std::span<const Rational> u, Matrix& A, Matrix& B,
                     Matrix& G) {
  std::vector<Vector> grads;
  std::vector<std::size_t> owner;
  for (std::size_t y = 0; y < s.n(); ++y)
    for (auto i : active_pieces(s, y, u)) {
      grads.push_back(s.components()[y][i].w);
      owner.push_back(y);
    }
  A = Matrix::from_columns(grads, s.d());
  B = Matrix(s.n(), grads.size());
  for (std::size_t j = 0; j < owner.size(); ++j) B(owner[j], j) = 1;
  G = Matrix::from_columns(normal_cone_generators(s, u), s.d());
}

}  // namespace detail

// N(psi(u)) = {B q : q in Delta_s, A q + G lambda = 0, lambda >= 0}. The
// lifted system is a pointed polyhedron whose recession directions have
// q = 0, so the image is the hull of B applied to its basic solutions.
inline NormalSetResult positive_normal_set(const PLSurrogate& s, std::span<const Rational> u) {
  NormalSetResult res;
  res.z = evaluate(s, u);
  res.u.assign(u.begin(), u.end());
  detail::assemble(s, u, res.A, res.B, res.G);
  HPolytope sys = detail::lifted_system(res.A, res.B, res.G, nullptr);
  std::vector<Vector> image;
  for (const auto& qv : detail::enumerate_vertices(sys)) {
    Vector qs(qv.begin(), qv.begin() + static_cast<std::ptrdiff_t>(res.A.cols()));
    image.push_back(res.B * qs);
  }
  res.polytope = hull_from_points(image, s.n());
  res.vertices = vertices(res.polytope);
  return res;
}
inline NormalSetResult positive_normal_set(const PLSurrogate& s, const Vector& u) {
  return positive_normal_set(s, std::span<const Rational>(u));
}

// p in N(psi(u)), decided by feasibility of the lifted system with B q = p.
inline bool normal_membership(const PLSurrogate& s, std::span<const Rational> u,
                              std::span<const Rational> p) {
  check_domain(s, u);
  if (p.size() != s.n()) throw InputError("normal_membership: p has wrong length");
  Rational total = 0;
  for (const auto& x : p) {
    if (x < 0) throw InputError("normal_membership: p has a negative entry");
    total += x;
  }
  if (total != 1) throw InputError("normal_membership: p does not sum to 1");
  Matrix A, B, G;
  detail::assemble(s, u, A, B, G);
  Vector pv(p.begin(), p.end());
  return is_feasible(detail::lifted_system(A, B, G, &pv));
}
inline bool normal_membership(const PLSurrogate& s, const Vector& u, const Vector& p) {
  return normal_membership(s, std::span<const Rational>(u), std::span<const Rational>(p));
}

// Kinks of a 1-D surrogate: crossings of two pieces of one component where
// both attain the max. Sorted, deduplicated.
inline std::vector<Rational> breakpoints(const PLSurrogate& s) {
  if (s.d() != 1) throw InputError("breakpoints: surrogate is not one-dimensional");
  std::vector<Rational> out;
  for (std::size_t y = 0; y < s.n(); ++y) {
    const auto& comp = s.components()[y];
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (comp[i].w[0] == comp[j].w[0]) continue;
        Rational x = (comp[j].c - comp[i].c) / (comp[i].w[0] - comp[j].w[0]);
        Vector u{x};
        if (s.domain() && !contains_point(*s.domain(), u)) continue;
        Rational top = component_value(s, y, u);
        if (comp[i].w[0] * x + comp[i].c == top) out.push_back(x);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Closed-form probability-estimation surrogate on
// {u in R_+^{n-1} : sum u <= 1}.
struct QuadraticProbSurrogate {
  std::size_t n = 2;
};

inline QuadraticProbSurrogate universal_surrogate(std::size_t n) {
  if (n < 2) throw InputError("universal_surrogate: n must be >= 2");
  return QuadraticProbSurrogate{n};
}

inline void check_universal_domain(const QuadraticProbSurrogate& q, std::span<const Rational> u) {
  if (u.size() != q.n - 1) throw InputError("universal surrogate: u has wrong length");
  Rational total = 0;
  for (const auto& x : u) {
    if (x < 0) throw InputError("universal surrogate: u outside the domain");
    total += x;
  }
  if (total > 1) throw InputError("universal surrogate: u outside the domain");
}

inline Rational universal_evaluate(const QuadraticProbSurrogate& q, std::size_t y,
                                   std::span<const Rational> u) {
  if (y >= q.n) throw InputError("universal_evaluate: label out of range");
  check_universal_domain(q, u);
  Rational total = 0;
  for (std::size_t j = 0; j + 1 < q.n; ++j) {
    Rational x = j == y ? Rational(u[j] - 1) : u[j];
    total += x * x;
  }
  return total;
}

inline Vector universal_minimizer(const QuadraticProbSurrogate& q, std::span<const Rational> p) {
  if (p.size() != q.n) throw InputError("universal_minimizer: p has wrong length");
  Rational total = 0;
  for (const auto& x : p) {
    if (x < 0) throw InputError("universal_minimizer: p has a negative entry");
    total += x;
  }
  if (total != 1) throw InputError("universal_minimizer: p does not sum to 1");
  return Vector(p.begin(), p.end() - 1);
}

// p.psi(u*) at the minimizer: sum_{j<n} p_j (1 - p_j).
inline Rational universal_inner_risk(const QuadraticProbSurrogate& q, std::span<const Rational> p) {
  Vector u = universal_minimizer(q, p);
  Rational total = 0;
  for (const auto& x : u) total += x * (1 - x);
  return total;
}

// psi(u) = M u - r on conv(anchors).
struct LinearEmbedSurrogate {
  std::size_t n = 0;
  std::size_t d = 0;
  Matrix map_matrix;  // n x d
  Vector translation;
  std::vector<Vector> anchors;
  HPolytope domain;

  // Same surrogate as a PL object (one affine piece per label).
  PLSurrogate to_pl() const {
    std::vector<std::vector<AffinePiece>> comps(n);
    for (std::size_t y = 0; y < n; ++y)
      comps[y].push_back({map_matrix.row_vector(y), Rational(-translation[y])});
    return PLSurrogate(n, d, comps, domain, SurrogateFamily::kEmbedding).set_name("embedding");
  }
};

inline Vector linear_embed_evaluate(const LinearEmbedSurrogate& e, std::span<const Rational> u) {
  if (u.size() != e.d) throw InputError("linear_embed_evaluate: u has wrong dimension");
  if (!contains_point(e.domain, u))
    throw InputError("linear_embed_evaluate: u lies outside conv(anchors)");
  Vector z = e.map_matrix * u;
  for (std::size_t y = 0; y < e.n; ++y) z[y] -= e.translation[y];
  return z;
}
inline Vector linear_embed_evaluate(const LinearEmbedSurrogate& e, const Vector& u) {
  return linear_embed_evaluate(e, std::span<const Rational>(u));
}

// Default analysis points: e_y and 0 for Crammer-Singer; for 1-D surrogates
// {1..n}, every kink, and midpoints between consecutive kinks; otherwise
// (including embeddings) nothing, callers supply anchors.
inline std::vector<Vector> default_points(const PLSurrogate& s) {
  std::vector<Vector> pts;
  if (s.family() == SurrogateFamily::kCrammerSinger) {
    for (std::size_t y = 0; y < s.d(); ++y) {
      Vector e(s.d(), Rational(0));
      e[y] = 1;
      pts.push_back(std::move(e));
    }
    pts.push_back(Vector(s.d(), Rational(0)));
    return pts;
  }
  if (s.d() == 1) {
    std::vector<Rational> xs;
    for (std::size_t y = 1; y <= s.n(); ++y) xs.emplace_back(static_cast<long>(y));
    auto kinks = breakpoints(s);
    xs.insert(xs.end(), kinks.begin(), kinks.end());
    for (std::size_t i = 0; i + 1 < kinks.size(); ++i)
      xs.push_back((kinks[i] + kinks[i + 1]) / 2);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const auto& x : xs) {
      Vector u{x};
      if (!s.domain() || contains_point(*s.domain(), u)) pts.push_back(std::move(u));
    }
  }
  return pts;
}

// Rational grid over the domain (box [lo, hi]^d with `step` when free;
// grid points inside the domain plus its vertices otherwise).
inline std::vector<Vector> grid_points(const PLSurrogate& s, const Rational& lo = -3,
                                       const Rational& hi = 3,
                                       const Rational& step = Rational(1, 4)) {
  if (step <= 0) throw InputError("grid_points: step must be positive");
  std::vector<Vector> out;
  Rational blo = lo, bhi = hi;
  if (s.domain()) {
    const auto& vs = vertices(*s.domain());
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::vector<Rational> axis;
  for (Rational x = blo; x <= bhi; x += step) axis.push_back(x);
  const std::size_t d = s.d();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= axis.size();
    if (total > 2'000'000) throw LimitError("grid_points: grid too large");
  }
  std::vector<std::size_t> idx(d, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    Vector u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = axis[idx[i]];
    if (!s.domain() || contains_point(*s.domain(), u)) out.push_back(std::move(u));
    for (std::size_t i = 0; i < d; ++i) {
      if (++idx[i] < axis.size()) break;
      idx[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace calib

#endif  // CALIB_SURROGATE_HPP_
