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


// Checks the Crammer-Singer surrogate against the abstain loss and prints
// the prediction map that the sufficient check certifies.

#include <iostream>

#include "calib/calibration.hpp"

int main() {
  using namespace calib;
  const LossMatrix loss = abstain(3);
  const PLSurrogate cs = crammer_singer(3);
  const auto points = default_points(cs);

  const CalibrationVerdict nec = necessary_check(loss, cs, points);
  const CalibrationVerdict suf = sufficient_check(loss, cs, points);
  std::cout << "necessary: " << to_string(nec.status) << "\n"
            << "sufficient: " << to_string(suf.status) << " (" << to_string(suf.coverage)
            << ")\n";
  if (suf.status != CalibrationStatus::kCalibrated) return 1;

  const auto pred = build_pred(suf);
  for (std::size_t j = 0; j < points.size(); ++j)
    std::cout << "  pred" << to_string(points[j]) << " = " << loss.col_labels()[pred[j]] << "\n";

  // The zero-one loss fails at the origin.
  const CalibrationVerdict zo = necessary_check(zero_one(3), cs, points);
  std::cout << "zero_one: " << to_string(zo.status);
  if (!zo.violations.empty())
    std::cout << " at u = " << to_string(points[zo.violations.front().point]);
  std::cout << "\n";
  return 0;
}
