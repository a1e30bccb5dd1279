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


#ifndef CALIB_REPORT_HPP_
#define CALIB_REPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "calib/io/json.hpp"
#include "calib/rational.hpp"

namespace calib {

namespace detail {

inline bool is_scalar(const io::Json& j) { return !j.is_array() && !j.is_object(); }

inline std::string scalar_text(const io::Json& j, bool decimal) {
  if (j.is_null()) return "—";
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (decimal && s.find('/') != std::string::npos) {
      try {
        return s + " (~" + to_decimal(parse_rational(s)) + ")";
      } catch (const InputError&) {
      }
    }
    return s;
  }
  return j.dump();
}

inline std::string inline_text(const io::Json& j, bool decimal) {
  if (is_scalar(j)) return scalar_text(j, decimal);
  if (j.empty()) return "—";
  std::string s = "(";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ",";
    first = false;
    s += inline_text(x, decimal);
  }
  return s + ")";
}

// Arrays of scalars (or of scalar arrays) print on one line.
inline bool is_flat(const io::Json& j) {
  if (is_scalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (is_scalar(x)) continue;
    if (!x.is_array()) return false;
    for (const auto& y : x)
      if (!is_scalar(y)) return false;
  }
  return true;
}

inline void flatten(const io::Json& j, const std::string& prefix, bool decimal,
                    std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_flat(j)) {
    rows.emplace_back(prefix, inline_text(j, decimal));
    return;
  }
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(prefix, "—");
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), decimal, rows);
    return;
  }
  std::size_t i = 1;
  for (const auto& x : j) flatten(x, prefix + "[" + std::to_string(i++) + "]", decimal, rows);
}

}  // namespace detail

// One "key=value" line per leaf in document order; nested keys are dotted,
// array elements 1-indexed, empty lists and nulls shown as U+2014. With
// `decimal`, non-integer rationals gain an approximate decimal.
inline std::string render_report(const io::Json& report, bool decimal = false) {
  std::vector<std::pair<std::string, std::string>> rows;
  detail::flatten(report, "", decimal, rows);
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << (k.empty() ? "value" : k) << "=" << v << "\n";
  return out.str();
}

}  // namespace calib

#endif  // CALIB_REPORT_HPP_
