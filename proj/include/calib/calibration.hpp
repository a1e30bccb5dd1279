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


#ifndef CALIB_CALIBRATION_HPP_
#define CALIB_CALIBRATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "calib/error.hpp"
#include "calib/losses.hpp"
#include "calib/polytope.hpp"
#include "calib/surrogate.hpp"

namespace calib {

enum class CalibrationStatus { kCalibrated, kNotCalibrated, kUndetermined };

inline const char* to_string(CalibrationStatus s) {
  switch (s) {
    case CalibrationStatus::kCalibrated: return "calibrated";
    case CalibrationStatus::kNotCalibrated: return "not-calibrated";
    case CalibrationStatus::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

enum class CoverageRule { kNone, kTriggerContainment, kUnionSplitting };

inline const char* to_string(CoverageRule r) {
  switch (r) {
    case CoverageRule::kNone: return "none";
    case CoverageRule::kTriggerContainment: return "trigger-containment";
    case CoverageRule::kUnionSplitting: return "union-splitting";
  }
  return "none";
}

struct PointAnalysis {
  NormalSetResult normal;
  // Trigger sets containing the normal set, ascending.
  std::vector<std::size_t> containing;
};

// A point whose normal set escapes every trigger set; `escapes[t]` is a
// vertex of the normal set outside Q_t.
struct Violation {
  std::size_t point = 0;
  std::vector<Vector> escapes;
};

struct CalibrationVerdict {
  CalibrationStatus status = CalibrationStatus::kUndetermined;
  std::vector<PointAnalysis> points;
  std::vector<Violation> violations;
  // Certificate for "calibrated": assignment[j] = least t with N_j in Q_t,
  // and either cover[t] = some j with Q_t in N_j, or a union-splitting proof.
  std::vector<std::optional<std::size_t>> assignment;
  CoverageRule coverage = CoverageRule::kNone;
  std::vector<std::size_t> cover;
  // Relative-interior point of Delta_n not covered by any normal set.
  std::optional<Vector> uncovered;
};

inline std::vector<PointAnalysis> analyze_points(const LossMatrix& L, const PLSurrogate& s,
                                                 const std::vector<Vector>& points) {
  if (s.n() != L.n()) throw InputError("surrogate and loss disagree on the number of labels");
  std::vector<HPolytope> triggers;
  for (std::size_t t = 0; t < L.k(); ++t) triggers.push_back(trigger_set(L, t));
  std::vector<PointAnalysis> out;
  for (const auto& u : points) {
    PointAnalysis pa{positive_normal_set(s, u), {}};
    for (std::size_t t = 0; t < L.k(); ++t)
      if (contains_polytope(triggers[t], pa.normal.polytope)) pa.containing.push_back(t);
    out.push_back(std::move(pa));
  }
  return out;
}

// Any point whose normal set lies in no trigger set refutes calibration.
inline CalibrationVerdict necessary_check(const LossMatrix& L, const PLSurrogate& s,
                                          const std::vector<Vector>& points) {
  CalibrationVerdict v;
  v.points = analyze_points(L, s, points);
  for (std::size_t j = 0; j < v.points.size(); ++j) {
    v.assignment.push_back(v.points[j].containing.empty()
                               ? std::nullopt
                               : std::optional<std::size_t>(v.points[j].containing.front()));
    if (!v.points[j].containing.empty()) continue;
    Violation viol{j, {}};
    for (std::size_t t = 0; t < L.k(); ++t) {
      HPolytope q = trigger_set(L, t);
      for (const auto& vert : v.points[j].normal.vertices)
        if (!contains_point(q, vert)) {
          viol.escapes.push_back(vert);
          break;
        }
    }
    v.violations.push_back(std::move(viol));
  }
  v.status = v.violations.empty() ? CalibrationStatus::kUndetermined
                                  : CalibrationStatus::kNotCalibrated;
  return v;
}

// Certifies calibration when every normal set sits inside a trigger set and
// the normal sets cover Delta_n. Coverage is first tried via "every Q_t lies
// in some N_j"; failing that, by exact recursive splitting of the simplex.
// Never returns not-calibrated.
inline CalibrationVerdict sufficient_check(const LossMatrix& L, const PLSurrogate& s,
                                           const std::vector<Vector>& points) {
  CalibrationVerdict v;
  v.points = analyze_points(L, s, points);
  bool assigned = true;
  for (const auto& pa : v.points) {
    if (pa.containing.empty()) {
      v.assignment.push_back(std::nullopt);
      assigned = false;
    } else {
      v.assignment.push_back(pa.containing.front());
    }
  }
  if (!assigned || v.points.empty()) return v;

  bool by_containment = true;
  for (std::size_t t = 0; t < L.k() && by_containment; ++t) {
    HPolytope q = trigger_set(L, t);
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < v.points.size() && !hit; ++j)
      if (contains_polytope(v.points[j].normal.polytope, q)) hit = j;
    if (hit) v.cover.push_back(*hit);
    else by_containment = false;
  }
  if (by_containment) {
    v.coverage = CoverageRule::kTriggerContainment;
    v.status = CalibrationStatus::kCalibrated;
    return v;
  }
  v.cover.clear();
  std::vector<HPolytope> pieces;
  for (const auto& pa : v.points) pieces.push_back(pa.normal.polytope);
  v.uncovered = uncovered_point(simplex_polytope(L.n()), pieces);
  if (!v.uncovered) {
    v.coverage = CoverageRule::kUnionSplitting;
    v.status = CalibrationStatus::kCalibrated;
  }
  return v;
}

// pred'(u_j) = least t with N_j in Q_t.
inline std::vector<std::size_t> build_pred(const CalibrationVerdict& v) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < v.assignment.size(); ++j) {
    if (!v.assignment[j])
      throw InputError("build_pred: point " + std::to_string(j + 1) + " has no trigger set");
    out.push_back(*v.assignment[j]);
  }
  return out;
}

}  // namespace calib

#endif  // CALIB_CALIBRATION_HPP_
