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


#ifndef CALIB_RANKING_HPP_
#define CALIB_RANKING_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "calib/ccdim.hpp"
#include "calib/error.hpp"
#include "calib/losses.hpp"
#include "calib/matrix.hpp"
#include "calib/rational.hpp"

namespace calib {

inline constexpr std::size_t kMaxRankingDocs = 5;
inline constexpr std::size_t kMaxNdcgLabels = 64;

// sigma[i] = 1-based position of document i.
using Permutation = std::vector<std::size_t>;

inline void check_ranking_cap(std::size_t r) {
  if (r == 0) throw InputError("ranking: r must be >= 1");
  if (r > kMaxRankingDocs)
    throw LimitError("ranking: r = " + std::to_string(r) + " exceeds the cap of " +
                     std::to_string(kMaxRankingDocs));
}

// All of Pi_r in lexicographic order of the position vector.
inline std::vector<Permutation> all_permutations(std::size_t r) {
  check_ranking_cap(r);
  Permutation p(r);
  std::iota(p.begin(), p.end(), std::size_t{1});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string one_line(const Permutation& p) {
  std::string s;
  for (auto x : p) s += std::to_string(x);
  return s;
}

inline std::vector<std::string> permutation_labels(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  for (const auto& p : perms) out.push_back(one_line(p));
  return out;
}

// Directed graph on documents 1..r; edge (i, j) means i is preferred to j.
struct DAGEdgeList {
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void validate() const {
    std::vector<std::vector<std::size_t>> out(r + 1);
    std::vector<std::size_t> indeg(r + 1, 0);
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("DAG has a duplicate edge");
    for (auto [i, j] : edges) {
      if (i == 0 || j == 0 || i > r || j > r || i == j)
        throw InputError("DAG edge (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is invalid");
      out[i].push_back(j);
      ++indeg[j];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 1; v <= r; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (auto w : out[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (seen != r) throw InputError("graph has a cycle");
  }

  std::string label() const {
    std::string s;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e) s += " ";
      s += "(" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) + ")";
    }
    return s.empty() ? "{}" : s;
  }
};

// Every single-edge graph (i, j), i != j, in lexicographic order.
inline std::vector<DAGEdgeList> single_edge_dags(std::size_t r) {
  std::vector<DAGEdgeList> out;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      if (i != j) out.push_back({r, {{i, j}}});
  return out;
}

namespace detail {

template <class Entry>
LossMatrix pd_matrix(std::size_t r, const std::optional<std::vector<DAGEdgeList>>& dags,
                     bool relaxed, Entry entry) {
  check_ranking_cap(r);
  const auto graphs = dags ? *dags : single_edge_dags(r);
  if (graphs.empty()) throw InputError("pd: need at least one graph");
  const auto perms = all_permutations(r);
  Matrix m(graphs.size(), perms.size());
  std::vector<std::string> rows;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    if (graphs[g].r != r) throw InputError("pd: graph has the wrong number of documents");
    graphs[g].validate();
    rows.push_back(graphs[g].label());
    for (std::size_t s = 0; s < perms.size(); ++s) m(g, s) = entry(graphs[g], perms[s]);
  }
  return LossMatrix(m, rows, permutation_labels(perms), relaxed);
}

}  // namespace detail

// sum over edges (i, j) in G of 1(sigma(i) > sigma(j)).
inline LossMatrix pd_loss(std::size_t r,
                          const std::optional<std::vector<DAGEdgeList>>& dags = std::nullopt) {
  return detail::pd_matrix(r, dags, false,
                           [](const DAGEdgeList& g, const Permutation& s) {
                             long v = 0;
                             for (auto [i, j] : g.edges) v += s[i - 1] > s[j - 1] ? 1 : 0;
                             return Rational(v);
                           })
      .set_name("pd");
}

// Row-shifted PD: sum over j < i of (1((i,j) in G) - 1((j,i) in G)) *
// 1(sigma(i) > sigma(j)). Entries can be negative.
inline LossMatrix pd_loss_tilde(std::size_t r,
                                const std::optional<std::vector<DAGEdgeList>>& dags = std::nullopt) {
  return detail::pd_matrix(r, dags, true,
                           [r](const DAGEdgeList& g, const Permutation& s) {
                             long v = 0;
                             auto has = [&](std::size_t a, std::size_t b) {
                               return std::find(g.edges.begin(), g.edges.end(),
                                                std::make_pair(a, b)) != g.edges.end();
                             };
                             for (std::size_t i = 1; i <= r; ++i)
                               for (std::size_t j = 1; j < i; ++j)
                                 if (s[i - 1] > s[j - 1]) v += (has(i, j) ? 1 : 0) - (has(j, i) ? 1 : 0);
                             return Rational(v);
                           })
      .set_name("pd_tilde");
}

// Nonzero binary relevance vectors, y = 1..2^r - 1 read as r-bit strings
// (document 1 is the most significant bit).
inline std::vector<std::vector<int>> binary_relevances(std::size_t r) {
  std::vector<std::vector<int>> out;
  for (std::size_t code = 1; code < (std::size_t{1} << r); ++code) {
    std::vector<int> y(r);
    for (std::size_t i = 0; i < r; ++i) y[i] = (code >> (r - 1 - i)) & 1;
    out.push_back(std::move(y));
  }
  return out;
}

inline std::string relevance_label(const std::vector<int>& y) {
  std::string s;
  for (int v : y) s += std::to_string(v);
  return s;
}

// Index pairs (i, j), 1 <= j <= i <= r, in the order used by map_factors.
inline std::vector<std::pair<std::size_t, std::size_t>> map_pairs(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= i; ++j) out.emplace_back(i, j);
  return out;
}

// 1 - (1/|y|_1) sum_i sum_{j<=i} y_i y_j / max(sigma(i), sigma(j)).
inline LossMatrix map_loss(std::size_t r) {
  check_ranking_cap(r);
  const auto ys = binary_relevances(r);
  const auto perms = all_permutations(r);
  Matrix m(ys.size(), perms.size());
  std::vector<std::string> rows;
  for (std::size_t a = 0; a < ys.size(); ++a) {
    const auto& y = ys[a];
    const long ones = std::accumulate(y.begin(), y.end(), 0L);
    rows.push_back(relevance_label(y));
    for (std::size_t b = 0; b < perms.size(); ++b) {
      Rational gain = 0;
      for (auto [i, j] : map_pairs(r))
        if (y[i - 1] && y[j - 1])
          gain += Rational(1, static_cast<long>(std::max(perms[b][i - 1], perms[b][j - 1])));
      m(a, b) = 1 - gain / ones;
    }
  }
  return LossMatrix(m, rows, permutation_labels(perms)).set_name("map");
}

struct MapFactors {
  Matrix A;  // (2^r - 1) x r(r+1)/2, A[y,(i,j)] = y_i y_j / |y|_1
  Matrix B;  // r(r+1)/2 x r!, B[(i,j),sigma] = 1 / max(sigma(i), sigma(j))
};

inline MapFactors map_factors(std::size_t r) {
  check_ranking_cap(r);
  const auto ys = binary_relevances(r);
  const auto perms = all_permutations(r);
  const auto pairs = map_pairs(r);
  MapFactors f{Matrix(ys.size(), pairs.size()), Matrix(pairs.size(), perms.size())};
  for (std::size_t a = 0; a < ys.size(); ++a) {
    const long ones = std::accumulate(ys[a].begin(), ys[a].end(), 0L);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      auto [i, j] = pairs[c];
      f.A(a, c) = Rational(ys[a][i - 1] * ys[a][j - 1], ones);
    }
  }
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [i, j] = pairs[c];
    for (std::size_t b = 0; b < perms.size(); ++b)
      f.B(c, b) = Rational(1, static_cast<long>(std::max(perms[b][i - 1], perms[b][j - 1])));
  }
  return f;
}

// NDCG discounts 1/log2(p+1). Positions with p+1 a power of two give exact
// rationals; the others are carried as formal symbols.
struct NdcgLoss {
  std::size_t r = 0, s = 0;
  std::vector<std::vector<int>> relevances;
  std::vector<Permutation> perms;
  // symbols[0] is the constant 1; the rest are "1/log2(p+1)".
  std::vector<std::string> symbols;
  // coeff[m] is an n x k matrix: coefficient of symbol m in z(y) * loss(y, sigma).
  std::vector<Matrix> coeff;
  // Rows rescaled by z(y) > 0 keep rank and affine dimension; y = 0 rows are zero.
  LossMatrix approximate;  // discounts rounded to 128 bits, exact thereafter
};

namespace detail {

// 1/log2(x) rounded to a dyadic rational with 128 fractional bits.
inline Rational inverse_log2_128(std::size_t x) {
  namespace mp = boost::multiprecision;
  using Float = mp::number<mp::cpp_bin_float<160, mp::digit_base_2>>;
  Float v = Float(1) / (mp::log(Float(x)) / mp::log(Float(2)));
  Float scaled = mp::ldexp(v, 128);
  mp::cpp_int num = static_cast<mp::cpp_int>(mp::round(scaled));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 128);
  Rational q(mpz_class(num.str()), den);
  q.canonicalize();
  return q;
}

inline bool is_power_of_two(std::size_t x) { return x && !(x & (x - 1)); }

}  // namespace detail

inline NdcgLoss ndcg_loss(std::size_t r, std::size_t s) {
  check_ranking_cap(r);
  if (s < 2) throw InputError("ndcg: s must be >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < r; ++i) {
    n *= s;
    if (n > kMaxNdcgLabels)
      throw LimitError("ndcg: s^r exceeds the cap of " + std::to_string(kMaxNdcgLabels));
  }
  NdcgLoss out;
  out.r = r;
  out.s = s;
  out.perms = all_permutations(r);
  for (std::size_t code = 0; code < n; ++code) {
    std::vector<int> y(r);
    std::size_t c = code;
    for (std::size_t i = r; i > 0; --i) {
      y[i - 1] = static_cast<int>(c % s);
      c /= s;
    }
    out.relevances.push_back(std::move(y));
  }

  // Discount of each position as (symbol index, rational factor).
  out.symbols = {"1"};
  std::vector<std::pair<std::size_t, Rational>> disc(r + 1);
  std::vector<Rational> approx(r + 1);
  for (std::size_t p = 1; p <= r; ++p) {
    if (detail::is_power_of_two(p + 1)) {
      long e = 0;
      for (std::size_t x = p + 1; x > 1; x >>= 1) ++e;
      disc[p] = {0, Rational(1, e)};
      approx[p] = Rational(1, e);
    } else {
      out.symbols.push_back("1/log2(" + std::to_string(p + 1) + ")");
      disc[p] = {out.symbols.size() - 1, Rational(1)};
      approx[p] = detail::inverse_log2_128(p + 1);
    }
  }
  const std::size_t k = out.perms.size();
  out.coeff.assign(out.symbols.size(), Matrix(n, k));
  Matrix approx_m(n, k);
  std::vector<std::string> rows;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& y = out.relevances[a];
    rows.push_back(relevance_label(y));
    std::vector<long> gains(r);
    for (std::size_t i = 0; i < r; ++i) gains[i] = (1L << y[i]) - 1;
    std::vector<long> ideal = gains;
    std::sort(ideal.rbegin(), ideal.rend());
    Vector z_sym(out.symbols.size(), Rational(0));
    Rational z_apx = 0;
    for (std::size_t p = 1; p <= r; ++p) {
      z_sym[disc[p].first] += ideal[p - 1] * disc[p].second;
      z_apx += ideal[p - 1] * approx[p];
    }
    for (std::size_t b = 0; b < k; ++b) {
      Vector e_sym = z_sym;
      Rational dcg = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t pos = out.perms[b][i];
        e_sym[disc[pos].first] -= gains[i] * disc[pos].second;
        dcg += gains[i] * approx[pos];
      }
      for (std::size_t m = 0; m < out.symbols.size(); ++m) out.coeff[m](a, b) = e_sym[m];
      approx_m(a, b) = z_apx == 0 ? Rational(0) : Rational(1 - dcg / z_apx);
    }
  }
  out.approximate =
      LossMatrix(approx_m, rows, permutation_labels(out.perms)).set_name("ndcg");
  return out;
}

// Upper bounds valid for any values of the symbols: the scaled matrix is
// sum_m w_m C_m, whose column space lies in the span of all C_m columns.
inline std::size_t ndcg_symbolic_rank_bound(const NdcgLoss& L) {
  const std::size_t n = L.relevances.size(), k = L.perms.size();
  Matrix cat(n, k * L.coeff.size());
  for (std::size_t m = 0; m < L.coeff.size(); ++m)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t t = 0; t < k; ++t) cat(y, m * k + t) = L.coeff[m](y, t);
  return rank(cat);
}

inline std::size_t ndcg_symbolic_affdim_bound(const NdcgLoss& L) {
  const std::size_t n = L.relevances.size(), k = L.perms.size();
  if (k == 1) return 0;
  Matrix cat(n, (k - 1) * L.coeff.size());
  for (std::size_t m = 0; m < L.coeff.size(); ++m)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t t = 1; t < k; ++t)
        cat(y, m * (k - 1) + t - 1) = L.coeff[m](y, t) - L.coeff[m](y, 0);
  return rank(cat);
}

enum class RankingKind { kNdcg, kPd, kMap };

struct RankingReport {
  RankingKind kind = RankingKind::kPd;
  std::size_t r = 0, s = 0;
  LossMatrix matrix;  // PD: untilded single-edge matrix; NDCG: approximate
  CCDimReport report;
  bool approximate = false;
  // Closed-form bounds for comparison; signed because they can go negative
  // for small r.
  long closed_form_upper = 0;
  std::optional<long> closed_form_lower;
  // PD only.
  std::optional<std::size_t> tilde_rank;
  std::optional<bool> tilde_perm_columns;
  std::optional<Tightness> tilde_tightness;
  // NDCG only.
  std::optional<std::size_t> symbolic_rank_bound;
  std::optional<std::size_t> symbolic_affdim_bound;
};

inline RankingReport ranking_report(RankingKind kind, std::size_t r, std::size_t s = 2) {
  RankingReport out;
  out.kind = kind;
  out.r = r;
  const long rr = static_cast<long>(r);
  AnalyzeOptions opt;
  opt.search = false;
  switch (kind) {
    case RankingKind::kPd: {
      out.matrix = pd_loss(r);
      LossMatrix tilde = pd_loss_tilde(r);
      out.tilde_rank = rank(tilde.entries());
      out.tilde_perm_columns = permutation_columns_check(tilde);
      out.tilde_tightness = tightness_check(tilde);
      out.closed_form_upper = rr * (rr - 1) / 2;
      out.closed_form_lower = rr * (rr - 1) / 2 - 2;
      break;
    }
    case RankingKind::kMap:
      out.matrix = map_loss(r);
      out.closed_form_upper = rr * (rr + 1) / 2;
      out.closed_form_lower = rr * (rr - 1) / 2 - 4;
      break;
    case RankingKind::kNdcg: {
      out.s = s;
      NdcgLoss nd = ndcg_loss(r, s);
      out.matrix = nd.approximate;
      out.approximate = true;
      out.symbolic_rank_bound = ndcg_symbolic_rank_bound(nd);
      out.symbolic_affdim_bound = ndcg_symbolic_affdim_bound(nd);
      out.closed_form_upper = rr;
      break;
    }
  }
  out.report = analyze(out.matrix, opt);
  if (out.symbolic_affdim_bound)
    out.report.upper_bound = std::min(out.report.upper_bound, *out.symbolic_affdim_bound);
  return out;
}

}  // namespace calib

#endif  // CALIB_RANKING_HPP_
