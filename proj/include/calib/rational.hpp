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

#ifndef CALIB_RATIONAL_HPP_
#define CALIB_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "calib/error.hpp"

namespace calib {

// Exact rational scalar. GMP keeps it canonical (positive denominator,
// gcd 1) after every arithmetic operation; values built from strings are
// canonicalized explicitly. Beware `auto` with gmpxx expression templates:
// always materialize into a Rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "a", "a/b", and plain decimals such as "-0.125" (converted
// exactly). Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");

  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits.front() == '-' || whole_digits.front() == '+'))
      whole_digits.remove_prefix(1);
    if (whole_digits.empty() && frac.empty())
      throw InputError("malformed decimal '" + std::string(text) + "'");
    for (char c : whole_digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("malformed decimal '" + std::string(text) + "'");
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole_digits) + std::string(frac);
    if (digits.empty()) digits = "0";
    mpz_class n(digits);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    Rational q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
  }
  if (!is_int(text)) throw InputError("malformed rational '" + std::string(text) + "'");
  return Rational(mpz_class(strip_plus(text)));
}

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Fixed-point rendering rounded to `digits` places; approximate by nature.
inline std::string to_decimal(const Rational& q, int digits = 6) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  bool zero = rounded == 0;
  return (q < 0 && !zero ? "-" : "") + out;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vector to_vector(std::initializer_list<long> values) {
  Vector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

inline std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace calib

#endif  // CALIB_RATIONAL_HPP_
