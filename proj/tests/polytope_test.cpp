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

#include "calib/polytope.hpp"
#include "oracle.hpp"

namespace calib {
namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

// Delta_3 plus a list of rows a.p <= b.
HPolytope simplex_with(const std::vector<std::pair<Vector, Rational>>& rows) {
  HPolytope p = simplex_polytope(3);
  for (const auto& [a, b] : rows) p.add_inequality(a, b);
  return p;
}

HPolytope zero_one_q1() {
  return simplex_with({{vec({-1, 1, 0}), 0}, {vec({-1, 0, 1}), 0}});
}
HPolytope ord_q1() { return simplex_with({{vec({-1, 0, 0}), q(-1, 2)}}); }
HPolytope ord_q2() { return simplex_with({{vec({1, 0, 0}), q(1, 2)}, {vec({0, 0, 1}), q(1, 2)}}); }
HPolytope abstain_q4() {
  return simplex_with(
      {{vec({1, 0, 0}), q(1, 2)}, {vec({0, 1, 0}), q(1, 2)}, {vec({0, 0, 1}), q(1, 2)}});
}

std::vector<Vector> brute(const HPolytope& p) {
  oracle::Rows a, e;
  for (std::size_t i = 0; i < p.num_ineq(); ++i) a.push_back(p.ineq_A().row_vector(i));
  for (std::size_t i = 0; i < p.num_eq(); ++i) e.push_back(p.eq_A().row_vector(i));
  return oracle::brute_vertices(a, p.ineq_b(), e, p.eq_b(), p.dim());
}

HPolytope unit_square() {
  HPolytope s(2);
  s.add_inequality(vec({-1, 0}), 0);
  s.add_inequality(vec({1, 0}), 1);
  s.add_inequality(vec({0, -1}), 0);
  s.add_inequality(vec({0, 1}), 1);
  return s;
}

TEST(Simplex, SmallCases) {
  EXPECT_EQ(vertices(simplex_polytope(1)), std::vector<Vector>{vec({1})});
  EXPECT_EQ(vertices(simplex_polytope(2)), (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
  EXPECT_EQ(vertices(simplex_polytope(3)),
            (std::vector<Vector>{vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})}));
  EXPECT_THROW(simplex_polytope(0), std::invalid_argument);
}

TEST(ContainsPoint, Examples) {
  HPolytope d3 = simplex_polytope(3);
  EXPECT_TRUE(contains_point(d3, vec({q(1, 3), q(1, 3), q(1, 3)})));
  EXPECT_FALSE(contains_point(d3, vec({q(1, 2), q(1, 2), q(1, 2)})));
  EXPECT_TRUE(contains_point(ord_q1(), vec({q(3, 5), q(1, 5), q(1, 5)})));
  EXPECT_THROW(contains_point(d3, vec({1, 0})), std::invalid_argument);
}

TEST(Vertices, ZeroOneTriggerSet) {
  const std::vector<Vector> expected = {vec({q(1, 3), q(1, 3), q(1, 3)}),
                                        vec({q(1, 2), 0, q(1, 2)}),
                                        vec({q(1, 2), q(1, 2), 0}), vec({1, 0, 0})};
  EXPECT_EQ(brute(zero_one_q1()), expected);
  EXPECT_EQ(vertices(zero_one_q1()), expected);
}

TEST(Vertices, AbstainFourthTriggerSetIsATriangle) {
  const std::vector<Vector> expected = {vec({0, q(1, 2), q(1, 2)}), vec({q(1, 2), 0, q(1, 2)}),
                                        vec({q(1, 2), q(1, 2), 0})};
  EXPECT_EQ(brute(abstain_q4()), expected);
  EXPECT_EQ(vertices(abstain_q4()), expected);
}

TEST(Vertices, UnboundedIsAnError) {
  HPolytope half(2);
  half.add_inequality(vec({1, 0}), 0);
  EXPECT_THROW(vertices(half), LimitError);
}

TEST(Vertices, EmptyPolytope) {
  HPolytope p = simplex_polytope(2);
  p.add_inequality(vec({1, 1}), 0);
  EXPECT_TRUE(vertices(p).empty());
}

TEST(Containment, Examples) {
  EXPECT_TRUE(contains_polytope(zero_one_q1(), zero_one_q1()));
  EXPECT_TRUE(contains_polytope(zero_one_q1(), ord_q1()));
  EXPECT_FALSE(contains_polytope(ord_q1(), zero_one_q1()));
  Vector witness = vec({q(2, 5), q(3, 10), q(3, 10)});
  EXPECT_TRUE(contains_point(zero_one_q1(), witness));
  EXPECT_FALSE(contains_point(ord_q1(), witness));
}

TEST(Equality, Examples) {
  EXPECT_TRUE(equals_polytope(abstain_q4(), abstain_q4()));
  // (0,1,0) lies in the ordinal middle cell but not in the abstain cell.
  EXPECT_TRUE(contains_point(ord_q2(), vec({0, 1, 0})));
  EXPECT_FALSE(contains_point(abstain_q4(), vec({0, 1, 0})));
  EXPECT_FALSE(equals_polytope(ord_q2(), abstain_q4()));
}

TEST(Lp, Examples) {
  auto r = lp(vec({1, 0, 0}), simplex_polytope(3));
  ASSERT_EQ(r.status, LPStatus::kFeasible);
  EXPECT_EQ(*r.optimum, 0);
  EXPECT_TRUE(contains_point(simplex_polytope(3), *r.witness));
  EXPECT_EQ((*r.witness)[0], 0);

  r = lp(vec({1, 0, 0}), abstain_q4(), Sense::kMaximize);
  ASSERT_EQ(r.status, LPStatus::kFeasible);
  EXPECT_EQ(*r.optimum, q(1, 2));

  HPolytope bad(1);
  bad.add_inequality(vec({-1}), -1);
  bad.add_inequality(vec({1}), 0);
  EXPECT_EQ(lp(vec({1}), bad).status, LPStatus::kInfeasible);

  HPolytope ray(1);
  ray.add_inequality(vec({-1}), 0);
  EXPECT_EQ(lp(vec({1}), ray, Sense::kMaximize).status, LPStatus::kUnbounded);
}

TEST(StrictInterior, Examples) {
  auto p = strict_interior_point(simplex_polytope(3));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, vec({q(1, 3), q(1, 3), q(1, 3)}));

  HPolytope seg = simplex_polytope(2);
  seg.add_equality(vec({1, 0}), 1);
  EXPECT_FALSE(strict_interior_point(seg, {0, 1}));

  // Equal column expectations for the 3-class 0-1 loss.
  HPolytope eq = simplex_polytope(3);
  eq.add_equality(vec({1, -1, 0}), 0);
  eq.add_equality(vec({1, 0, -1}), 0);
  auto u = strict_interior_point(eq);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, vec({q(1, 3), q(1, 3), q(1, 3)}));
}

TEST(FeasibleSubspaceDim, Examples) {
  HPolytope sq = unit_square();
  EXPECT_EQ(feasible_subspace_dim(sq, vec({q(1, 2), q(1, 2)})), 2u);
  EXPECT_EQ(feasible_subspace_dim(sq, vec({1, q(1, 2)})), 1u);
  EXPECT_EQ(feasible_subspace_dim(sq, vec({1, 1})), 0u);
  EXPECT_EQ(feasible_subspace_dim(zero_one_q1(), vec({q(1, 3), q(1, 3), q(1, 3)})), 0u);
  EXPECT_EQ(feasible_subspace_dim(simplex_polytope(3), vec({q(1, 3), q(1, 3), q(1, 3)})), 2u);
  EXPECT_THROW(feasible_subspace_dim(sq, vec({2, 0})), InputError);
}

TEST(Hull, RoundTripsTriggerSets) {
  for (const HPolytope& p : {zero_one_q1(), ord_q1(), ord_q2(), abstain_q4()}) {
    HPolytope h = hull_from_points(vertices(p), 3);
    EXPECT_TRUE(equals_polytope(p, h));
    EXPECT_EQ(vertices(h), vertices(p));
  }
  HPolytope pt = hull_from_points({vec({1, 2})}, 2);
  EXPECT_EQ(vertices(pt), std::vector<Vector>{vec({1, 2})});
  HPolytope seg = hull_from_points({vec({0, 0}), vec({2, 2}), vec({1, 1})}, 2);
  EXPECT_EQ(vertices(seg), (std::vector<Vector>{vec({0, 0}), vec({2, 2})}));
}

TEST(Coverage, ZeroOneCellsCoverSimplex) {
  std::vector<HPolytope> cells;
  for (int t = 0; t < 3; ++t) {
    HPolytope c = simplex_polytope(3);
    for (int s = 0; s < 3; ++s) {
      if (s == t) continue;
      Vector a(3, Rational(0));
      a[t] = -1;
      a[s] = 1;
      c.add_inequality(a, 0);
    }
    cells.push_back(c);
  }
  EXPECT_FALSE(uncovered_point(simplex_polytope(3), cells));
  cells.pop_back();
  auto w = uncovered_point(simplex_polytope(3), cells);
  ASSERT_TRUE(w);
  EXPECT_FALSE(contains_point(cells[0], *w));
  EXPECT_FALSE(contains_point(cells[1], *w));
}

// Random cuts of Delta_3 through rational halfspaces.
HPolytope random_cell(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(0, 3);
  HPolytope p = simplex_polytope(3);
  std::uniform_int_distribution<int> count(0, 3);
  for (int i = count(rng); i > 0; --i)
    p.add_inequality(vec({coef(rng), coef(rng), coef(rng)}), make_rational(rhs(rng), 3));
  return p;
}

bool in_hull_by_lp(const std::vector<Vector>& vs, const Vector& x) {
  HPolytope lam(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vector e(vs.size(), Rational(0));
    e[i] = -1;
    lam.add_inequality(e, 0);
  }
  lam.add_equality(Vector(vs.size(), Rational(1)), 1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vector row(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) row[i] = vs[i][j];
    lam.add_equality(row, x[j]);
  }
  return is_feasible(lam);
}

TEST(PolytopeProperties, RandomCells) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    HPolytope p = random_cell(rng);
    const auto& vs = vertices(p);
    EXPECT_EQ(vs, brute(p));
    for (const auto& v : vs) EXPECT_TRUE(contains_point(p, v));
    if (vs.empty()) {
      EXPECT_FALSE(is_feasible(p));
      continue;
    }
    for (int k = 0; k < 5; ++k) {
      Vector x = oracle::random_simplex_point(rng, 3);
      EXPECT_EQ(contains_point(p, x), in_hull_by_lp(vs, x));
    }
    Vector c = vec({q(rng() % 7) - 3, q(rng() % 7) - 3, q(rng() % 7) - 3});
    auto r = lp(c, p);
    ASSERT_EQ(r.status, LPStatus::kFeasible);
    Rational best = dot(c, vs[0]);
    for (const auto& v : vs) best = std::min<Rational>(best, dot(c, v));
    EXPECT_EQ(*r.optimum, best);
  }
}

TEST(PolytopeProperties, ContainmentIsAPartialOrder) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    HPolytope a = random_cell(rng), b = random_cell(rng), c = random_cell(rng);
    if (vertices(a).empty() || vertices(b).empty() || vertices(c).empty()) continue;
    EXPECT_TRUE(contains_polytope(a, a));
    if (contains_polytope(a, b) && contains_polytope(b, a)) EXPECT_TRUE(equals_polytope(a, b));
    if (contains_polytope(a, b) && contains_polytope(b, c)) EXPECT_TRUE(contains_polytope(a, c));
    // a ∩ b is contained in both.
    HPolytope ab = a;
    for (std::size_t i = 0; i < b.num_ineq(); ++i) ab.add_inequality(b.ineq_A().row(i), b.ineq_b()[i]);
    if (!vertices(ab).empty()) {
      EXPECT_TRUE(contains_polytope(a, ab));
      EXPECT_TRUE(contains_polytope(b, ab));
    }
  }
}

TEST(PolytopeProperties, FeasibleSubspaceDimDropsWithNewEquality) {
  std::mt19937 rng(3);
  HPolytope cube(3);
  for (int j = 0; j < 3; ++j) {
    Vector e(3, Rational(0));
    e[j] = 1;
    cube.add_inequality(e, 1);
    e[j] = -1;
    cube.add_inequality(e, 0);
  }
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = oracle::random_simplex_point(rng, 3, true);
    std::size_t before = feasible_subspace_dim(cube, x);
    Vector a = vec({q(rng() % 5) + 1, q(rng() % 5) - 2, 1});
    HPolytope cut = cube;
    cut.add_equality(a, dot(a, x));
    EXPECT_EQ(feasible_subspace_dim(cut, x), before - 1);
  }
}

}  // namespace
}  // namespace calib
