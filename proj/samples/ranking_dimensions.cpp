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


// Prints dimension bounds for the ranking losses at small r.

#include <cstdio>

#include "calib/ranking.hpp"

int main() {
  using namespace calib;
  std::printf("%-6s %2s %6s %6s %6s %6s\n", "loss", "r", "n", "k", "lower", "upper");
  for (auto [kind, name] : {std::pair{RankingKind::kPd, "pd"}, std::pair{RankingKind::kMap, "map"},
                            std::pair{RankingKind::kNdcg, "ndcg"}}) {
    for (std::size_t r = 2; r <= 4; ++r) {
      const RankingReport rep = ranking_report(kind, r);
      std::printf("%-6s %2zu %6zu %6zu %6zu %6zu%s\n", name, r, rep.report.n, rep.report.k,
                  rep.report.lower_bound, rep.report.upper_bound,
                  rep.approximate ? "  (approximate discounts)" : "");
    }
  }
  return 0;
}
