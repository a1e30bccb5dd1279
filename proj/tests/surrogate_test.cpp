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


#include <random>

#include <gtest/gtest.h>

#include "calib/surrogate.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

namespace calib {
namespace {

using fixtures::q;
using fixtures::vec;

TEST(Surrogates, CrammerSingerValues) {
  PLSurrogate cs = crammer_singer(3);
  auto pts = fixtures::cs_points();
  auto vals = fixtures::cs_values();
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(evaluate(cs, pts[i]), vals[i]);
  // max(1 + u_o - u_y, 0) by hand.
  EXPECT_EQ(evaluate(cs, vec({q(1, 2), 0, -1})), vec({q(1, 2), q(3, 2), q(5, 2)}));
  EXPECT_THROW(crammer_singer(1), InputError);
  EXPECT_THROW(evaluate(cs, vec({0, 0})), InputError);
}

TEST(Surrogates, OneDimensionalValues) {
  PLSurrogate a = absolute(3);
  auto av = fixtures::absolute_values();
  for (long u = 1; u <= 3; ++u) EXPECT_EQ(evaluate(a, vec({u})), av[u - 1]);
  PLSurrogate e = eps_insensitive(3, q(1, 4));
  auto pts = fixtures::eps_points();
  auto ev = fixtures::eps_values();
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(evaluate(e, pts[i]), ev[i]);
  EXPECT_THROW(eps_insensitive(3, q(1, 2)), InputError);
  EXPECT_THROW(eps_insensitive(3, q(-1, 4)), InputError);
  EXPECT_NO_THROW(eps_insensitive(3, 0));
}

TEST(Surrogates, Breakpoints) {
  EXPECT_EQ(breakpoints(absolute(3)), vec({1, 2, 3}));
  EXPECT_EQ(breakpoints(eps_insensitive(3, q(1, 4))),
            vec({q(3, 4), q(5, 4), q(7, 4), q(9, 4), q(11, 4), q(13, 4)}));
  EXPECT_THROW(breakpoints(crammer_singer(3)), InputError);
}

TEST(Surrogates, DefaultPoints) {
  EXPECT_EQ(default_points(crammer_singer(3)), fixtures::cs_points());
  auto pts = default_points(eps_insensitive(3, q(1, 4)));
  EXPECT_EQ(pts.size(), 11u);
  for (const auto& u : fixtures::eps_points())
    EXPECT_NE(std::find(pts.begin(), pts.end(), u), pts.end());
}

TEST(Surrogates, Subdifferential) {
  // At u = 2 the component |u - 2| has subdifferential [-1, 1].
  auto sv = subdifferential_vertices(absolute(3), 1, vec({2}));
  std::sort(sv.begin(), sv.end());
  EXPECT_EQ(sv, (std::vector<Vector>{vec({-1}), vec({1})}));
  EXPECT_EQ(active_pieces(absolute(3), 0, vec({2})), std::vector<std::size_t>{0});
}

TEST(NormalSets, CrammerSinger) {
  PLSurrogate cs = crammer_singer(3);
  auto pts = fixtures::cs_points();
  auto ref = fixtures::cs_normal_sets();
  for (std::size_t i = 0; i < pts.size(); ++i)
    EXPECT_TRUE(equals_polytope(positive_normal_set(cs, pts[i]).polytope, ref[i])) << i;
}

TEST(NormalSets, Absolute) {
  PLSurrogate a = absolute(3);
  auto ref = fixtures::absolute_normal_sets();
  for (long u = 1; u <= 3; ++u)
    EXPECT_TRUE(equals_polytope(positive_normal_set(a, vec({u})).polytope, ref[u - 1])) << u;
  // Between kinks the slope p1 - p2 - p3 must vanish.
  auto mid = positive_normal_set(a, vec({q(3, 2)})).vertices;
  std::sort(mid.begin(), mid.end());
  EXPECT_EQ(mid, (std::vector<Vector>{vec({q(1, 2), 0, q(1, 2)}), vec({q(1, 2), q(1, 2), 0})}));
}

TEST(NormalSets, EpsInsensitive) {
  PLSurrogate e = eps_insensitive(3, q(1, 4));
  auto pts = fixtures::eps_points();
  auto ref = fixtures::eps_normal_sets();
  for (std::size_t i = 0; i < pts.size(); ++i)
    EXPECT_TRUE(equals_polytope(positive_normal_set(e, pts[i]).polytope, ref[i])) << i;
}

TEST(NormalSets, DomainBoundaryAddsNormalCone) {
  // absolute(2) restricted to [1, 2].
  HPolytope dom(1);
  dom.add_inequality(vec({-1}), -1);
  dom.add_inequality(vec({1}), 2);
  PLSurrogate a(2, 1, absolute(2).components(), dom);
  auto n1 = positive_normal_set(a, vec({1}));
  auto n2 = positive_normal_set(a, vec({2}));
  // p.psi(u) = p1 (u - 1) + p2 (2 - u) has slope p1 - p2.
  HPolytope h1 = simplex_polytope(2);
  h1.add_inequality(vec({-1, 1}), 0);
  HPolytope h2 = simplex_polytope(2);
  h2.add_inequality(vec({1, -1}), 0);
  EXPECT_TRUE(equals_polytope(n1.polytope, h1));
  EXPECT_TRUE(equals_polytope(n2.polytope, h2));
  EXPECT_THROW(positive_normal_set(a, vec({3})), InputError);
}

// Property: p is in N(u) exactly when u minimizes p.psi over a grid that
// contains every kink, checked on random p with small denominators.
void check_membership_against_grid(const PLSurrogate& s, const std::vector<Vector>& grid,
                                   unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vector p = oracle::random_simplex_point(rng, s.n());
    std::vector<Rational> risk;
    for (const auto& u : grid) risk.push_back(dot(p, evaluate(s, u)));
    const Rational best = *std::min_element(risk.begin(), risk.end());
    for (std::size_t i = 0; i < grid.size(); ++i)
      ASSERT_EQ(normal_membership(s, grid[i], p), risk[i] == best)
          << to_string(grid[i]) << " p=" << to_string(p);
  }
}

TEST(NormalSetProperty, OneDimensionalGrid) {
  check_membership_against_grid(absolute(3), grid_points(absolute(3), 0, 4), 11, 25);
  PLSurrogate e = eps_insensitive(3, q(1, 4));
  check_membership_against_grid(e, grid_points(e, 0, 4), 12, 25);
}

TEST(NormalSetProperty, CrammerSingerGrid) {
  PLSurrogate cs = crammer_singer(3);
  check_membership_against_grid(cs, grid_points(cs, -1, 1, q(1, 2)), 13, 8);
}

TEST(NormalSetProperty, VerticesAreInTheSet) {
  PLSurrogate cs = crammer_singer(3);
  for (const auto& u : grid_points(cs, -1, 1, 1)) {
    auto res = positive_normal_set(cs, u);
    for (const auto& v : res.vertices) EXPECT_TRUE(normal_membership(cs, u, v));
  }
}

TEST(Universal, Quadratic) {
  auto us = universal_surrogate(3);
  Vector p = vec({q(1, 2), q(1, 3), q(1, 6)});
  Vector u = universal_minimizer(us, p);
  EXPECT_EQ(u, vec({q(1, 2), q(1, 3)}));
  EXPECT_EQ(universal_inner_risk(us, p), q(1, 4) + q(2, 9));
  // Inner risk at u equals the closed form, and nearby grid points do no better.
  Rational at_u = 0;
  for (std::size_t y = 0; y < 3; ++y) at_u += p[y] * universal_evaluate(us, y, u);
  EXPECT_EQ(at_u, universal_inner_risk(us, p));
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; a + b <= 6; ++b) {
      Vector v = vec({q(a, 6), q(b, 6)});
      Rational r = 0;
      for (std::size_t y = 0; y < 3; ++y) r += p[y] * universal_evaluate(us, y, v);
      EXPECT_GE(r, at_u);
    }
  EXPECT_THROW(universal_evaluate(us, 0, vec({1, 1})), InputError);
}

}  // namespace
}  // namespace calib
