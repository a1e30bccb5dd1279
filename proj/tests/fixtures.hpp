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


// Hand-transcribed reference sets on the 3-class simplex, shared by the unit
// tests and the acceptance binary.

#ifndef CALIB_TESTS_FIXTURES_HPP_
#define CALIB_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "calib/polytope.hpp"
#include "calib/rational.hpp"

namespace calib::fixtures {

inline Rational q(long a, long b = 1) { return make_rational(a, b); }
inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

// Delta_3 intersected with rows a.p <= b.
inline HPolytope simplex3(std::initializer_list<std::pair<Vector, Rational>> rows) {
  HPolytope p = simplex_polytope(3);
  for (const auto& [a, b] : rows) p.add_inequality(a, b);
  return p;
}

// p_i >= 1/2.
inline HPolytope at_least_half(int i) {
  Vector a(3, Rational(0));
  a[i] = -1;
  return simplex3({{a, q(-1, 2)}});
}

// {p_t >= p_s for all s}.
inline std::vector<HPolytope> zero_one_cells() {
  return {simplex3({{vec({-1, 1, 0}), 0}, {vec({-1, 0, 1}), 0}}),
          simplex3({{vec({1, -1, 0}), 0}, {vec({0, -1, 1}), 0}}),
          simplex3({{vec({1, 0, -1}), 0}, {vec({0, 1, -1}), 0}})};
}

// {p1 >= 1/2}, {p1 <= 1/2, p3 <= 1/2}, {p3 >= 1/2}.
inline std::vector<HPolytope> ordinal_cells() {
  return {at_least_half(0), simplex3({{vec({1, 0, 0}), q(1, 2)}, {vec({0, 0, 1}), q(1, 2)}}),
          at_least_half(2)};
}

// {p_i >= 1/2} for i = 1..3 and {max p_i <= 1/2}.
inline std::vector<HPolytope> abstain_cells() {
  return {at_least_half(0), at_least_half(1), at_least_half(2),
          simplex3({{vec({1, 0, 0}), q(1, 2)}, {vec({0, 1, 0}), q(1, 2)}, {vec({0, 0, 1}), q(1, 2)}})};
}

// Crammer-Singer points e_1, e_2, e_3, 0 and their normal sets.
inline std::vector<Vector> cs_points() {
  return {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0, 0, 0})};
}
inline std::vector<Vector> cs_values() {
  return {vec({0, 2, 2}), vec({2, 0, 2}), vec({2, 2, 0}), vec({1, 1, 1})};
}
inline std::vector<HPolytope> cs_normal_sets() { return abstain_cells(); }

// Absolute surrogate at u = 1, 2, 3.
inline std::vector<HPolytope> absolute_normal_sets() { return ordinal_cells(); }
inline std::vector<Vector> absolute_values() {
  return {vec({0, 1, 2}), vec({1, 0, 1}), vec({2, 1, 0})};
}

// eps = 1/4 surrogate at u = 5/4, 7/4, 9/4, 11/4.
inline std::vector<Vector> eps_points() {
  return {vec({q(5, 4)}), vec({q(7, 4)}), vec({q(9, 4)}), vec({q(11, 4)})};
}
inline std::vector<Vector> eps_values() {
  return {vec({0, q(1, 2), q(3, 2)}), vec({q(1, 2), 0, 1}), vec({1, 0, q(1, 2)}),
          vec({q(3, 2), q(1, 2), 0})};
}
inline std::vector<HPolytope> eps_normal_sets() {
  return {at_least_half(0),
          simplex3({{vec({-1, 0, 1}), 0}, {vec({1, 0, 0}), q(1, 2)}}),
          simplex3({{vec({1, 0, -1}), 0}, {vec({0, 0, 1}), q(1, 2)}}),
          at_least_half(2)};
}

}  // namespace calib::fixtures

#endif  // CALIB_TESTS_FIXTURES_HPP_
