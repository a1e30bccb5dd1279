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


#ifndef CALIB_IO_JSON_HPP_
#define CALIB_IO_JSON_HPP_

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "calib/calibration.hpp"
#include "calib/ccdim.hpp"
#include "calib/error.hpp"
#include "calib/losses.hpp"
#include "calib/matrix.hpp"
#include "calib/polytope.hpp"
#include "calib/ranking.hpp"
#include "calib/rational.hpp"
#include "calib/surrogate.hpp"

namespace calib::io {

using Json = nlohmann::ordered_json;

// Rationals are "a/b" strings; plain JSON numbers are accepted on input and
// converted exactly from their textual form.
inline Json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw InputError("expected a rational, got " + j.dump());
}

inline Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline Vector vector_from(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

inline Json points_json(const std::vector<Vector>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(vector_json(p));
  return a;
}

inline std::vector<Vector> points_from(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of points");
  std::vector<Vector> out;
  for (const auto& p : j) {
    // A bare rational is a 1-D point.
    if (p.is_array()) out.push_back(vector_from(p));
    else out.push_back(Vector{rational_from(p)});
  }
  return out;
}

inline Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row_vector(i)));
  return a;
}

inline Matrix matrix_from(const Json& j, std::size_t cols_if_empty = 0) {
  if (!j.is_array()) throw InputError("expected a matrix (array of arrays)");
  if (j.empty()) return Matrix(0, cols_if_empty);
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw InputError("matrix rows have different lengths");
  return Matrix::from_rows(rows);
}

inline Json index_list_json(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

// --- polytope ---------------------------------------------------------------

inline Json polytope_json(const HPolytope& p, bool with_vertices = true) {
  Json j;
  j["dim"] = p.dim();
  j["ineq"] = matrix_json(p.ineq_A());
  j["ineq_b"] = vector_json(p.ineq_b());
  j["eq"] = matrix_json(p.eq_A());
  j["eq_b"] = vector_json(p.eq_b());
  if (with_vertices) j["vertices"] = points_json(vertices(p));
  return j;
}

inline HPolytope polytope_from(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw InputError("polytope JSON needs \"dim\"");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  HPolytope p(dim);
  auto add = [&](const char* a_key, const char* b_key, bool eq) {
    if (!j.contains(a_key)) return;
    Matrix a = matrix_from(j.at(a_key), dim);
    Vector b = j.contains(b_key) ? vector_from(j.at(b_key)) : Vector{};
    if (a.rows() != b.size()) throw InputError(std::string(b_key) + " length mismatch");
    if (a.rows() && a.cols() != dim) throw InputError(std::string(a_key) + " width mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (eq) p.add_equality(a.row(i), b[i]);
      else p.add_inequality(a.row(i), b[i]);
    }
  };
  add("ineq", "ineq_b", false);
  add("eq", "eq_b", true);
  return p;
}

// --- losses -----------------------------------------------------------------

inline Json loss_json(const LossMatrix& L) {
  Json j;
  if (!L.name().empty()) j["name"] = L.name();
  j["n"] = L.n();
  j["k"] = L.k();
  j["entries"] = matrix_json(L.entries());
  j["row_labels"] = L.row_labels();
  j["col_labels"] = L.col_labels();
  if (L.sign_relaxed()) j["sign_relaxed"] = true;
  return j;
}

inline LossMatrix loss_from(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw InputError("loss JSON needs \"entries\"");
  Matrix m = matrix_from(j.at("entries"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != m.rows())
    throw InputError("loss JSON: n does not match entries");
  if (j.contains("k") && j.at("k").get<std::size_t>() != m.cols())
    throw InputError("loss JSON: k does not match entries");
  auto labels = [&](const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
      for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
    return out;
  };
  LossMatrix L(m, labels("row_labels"), labels("col_labels"), j.value("sign_relaxed", false));
  if (j.contains("name")) L.set_name(j.at("name").get<std::string>());
  return L;
}

// Comma- or whitespace-separated rationals, one row per line; blank lines
// and lines starting with '#' are ignored.
inline LossMatrix loss_from_csv(std::istream& in) {
  std::vector<Vector> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    for (auto& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ls(line);
    Vector row;
    std::string cell;
    while (ls >> cell) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("CSV loss matrix is empty");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw InputError("CSV rows have different lengths");
  return LossMatrix(Matrix::from_rows(rows));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline LossMatrix read_loss_file(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return loss_from_csv(in);
  }
  return loss_from(read_json_file(path));
}

// --- surrogates -------------------------------------------------------------

inline const char* family_name(SurrogateFamily f) {
  switch (f) {
    case SurrogateFamily::kCrammerSinger: return "crammer_singer";
    case SurrogateFamily::kAbsolute: return "absolute";
    case SurrogateFamily::kEpsInsensitive: return "eps_insensitive";
    case SurrogateFamily::kEmbedding: return "embedding";
    case SurrogateFamily::kGeneric: return "generic";
  }
  return "generic";
}

inline SurrogateFamily family_from(const std::string& s) {
  for (auto f : {SurrogateFamily::kCrammerSinger, SurrogateFamily::kAbsolute,
                 SurrogateFamily::kEpsInsensitive, SurrogateFamily::kEmbedding})
    if (s == family_name(f)) return f;
  return SurrogateFamily::kGeneric;
}

inline Json surrogate_json(const PLSurrogate& s) {
  Json j;
  if (!s.name().empty()) j["name"] = s.name();
  j["family"] = family_name(s.family());
  j["n"] = s.n();
  j["d"] = s.d();
  Json comps = Json::array();
  for (const auto& comp : s.components()) {
    Json pieces = Json::array();
    for (const auto& pc : comp) pieces.push_back({{"w", vector_json(pc.w)}, {"c", rational_json(pc.c)}});
    comps.push_back(pieces);
  }
  j["components"] = comps;
  j["domain"] = s.domain() ? polytope_json(*s.domain(), false) : Json("free");
  return j;
}

inline PLSurrogate surrogate_from(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("n") || !j.contains("d"))
    throw InputError("surrogate JSON needs n, d and components");
  const std::size_t n = j.at("n").get<std::size_t>(), d = j.at("d").get<std::size_t>();
  std::vector<std::vector<AffinePiece>> comps;
  for (const auto& comp : j.at("components")) {
    std::vector<AffinePiece> pieces;
    for (const auto& pc : comp) pieces.push_back({vector_from(pc.at("w")), rational_from(pc.at("c"))});
    comps.push_back(std::move(pieces));
  }
  std::optional<HPolytope> domain;
  if (j.contains("domain") && !(j.at("domain").is_string() && j.at("domain") == "free"))
    domain = polytope_from(j.at("domain"));
  PLSurrogate s(n, d, comps, domain, family_from(j.value("family", std::string("generic"))));
  if (j.contains("name")) s.set_name(j.at("name").get<std::string>());
  return s;
}

inline Json normal_set_json(const NormalSetResult& r) {
  Json j;
  j["u"] = vector_json(r.u);
  j["z"] = vector_json(r.z);
  j["A"] = matrix_json(r.A);
  j["B"] = matrix_json(r.B);
  if (r.G.cols() > 0) j["domain_normals"] = matrix_json(r.G.transpose());
  j["polytope"] = polytope_json(r.polytope, false);
  j["vertices"] = points_json(r.vertices);
  return j;
}

inline Json embedding_json(const LinearEmbedSurrogate& e) {
  Json j;
  j["n"] = e.n;
  j["d"] = e.d;
  j["map_matrix"] = matrix_json(e.map_matrix);
  j["translation"] = vector_json(e.translation);
  j["anchors"] = points_json(e.anchors);
  j["domain"] = polytope_json(e.domain);
  return j;
}

// --- calibration ------------------------------------------------------------

inline Json verdict_json(const CalibrationVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  Json pts = Json::array();
  for (const auto& pa : v.points) {
    Json p;
    p["u"] = vector_json(pa.normal.u);
    p["z"] = vector_json(pa.normal.z);
    p["normal_set_vertices"] = points_json(pa.normal.vertices);
    p["contained_in"] = index_list_json(pa.containing);
    pts.push_back(p);
  }
  j["points"] = pts;
  Json viol = Json::array();
  for (const auto& w : v.violations) {
    Json escapes = Json::array();
    for (std::size_t t = 0; t < w.escapes.size(); ++t)
      escapes.push_back({{"t", t + 1}, {"vertex", vector_json(w.escapes[t])}});
    viol.push_back({{"point", w.point + 1}, {"u", vector_json(v.points[w.point].normal.u)},
                    {"escapes", escapes}});
  }
  j["violations"] = viol;
  Json cert;
  Json assign = Json::array();
  for (const auto& a : v.assignment) assign.push_back(a ? Json(*a + 1) : Json(nullptr));
  cert["assignment"] = assign;
  cert["coverage"] = to_string(v.coverage);
  cert["cover"] = index_list_json(v.cover);
  cert["uncovered"] = v.uncovered ? vector_json(*v.uncovered) : Json(nullptr);
  j["certificate"] = cert;
  return j;
}

// --- ccdim ------------------------------------------------------------------

inline Json lower_bound_json(const LowerBoundAt& lb) {
  Json j;
  j["p"] = vector_json(lb.p);
  j["t"] = lb.t + 1;
  j["mu"] = lb.mu;
  j["support"] = lb.support;
  j["raw"] = lb.raw;
  j["bound"] = lb.bound;
  return j;
}

inline Json tightness_json(const Tightness& t) {
  Json j;
  j["holds"] = t.holds;
  j["witness"] = t.witness ? vector_json(*t.witness) : Json(nullptr);
  j["implied_lower"] = t.implied_lower;
  return j;
}

inline Json ccdim_json(const CCDimReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["affdim"] = r.affdim;
  j["rank"] = r.rank;
  j["upper_bound"] = r.upper_bound;
  j["lower_bound"] = r.lower_bound;
  j["lower_bound_kind"] = "best-found";
  j["lower_witness"] = lower_bound_json(r.lower_witness);
  j["candidates"] = r.candidates;
  j["exhaustive"] = r.exhaustive;
  j["tightness"] = tightness_json(r.tightness);
  j["perm_columns"] = r.perm_columns;
  return j;
}

inline const char* kind_name(RankingKind k) {
  switch (k) {
    case RankingKind::kNdcg: return "ndcg";
    case RankingKind::kPd: return "pd";
    case RankingKind::kMap: return "map";
  }
  return "pd";
}

inline Json ranking_json(const RankingReport& r, bool with_matrix = true) {
  Json j;
  j["kind"] = kind_name(r.kind);
  j["r"] = r.r;
  if (r.kind == RankingKind::kNdcg) j["s"] = r.s;
  j["approximate"] = r.approximate;
  j["report"] = ccdim_json(r.report);
  j["closed_form"] = {{"upper", r.closed_form_upper},
                      {"lower", r.closed_form_lower ? Json(*r.closed_form_lower) : Json(nullptr)}};
  if (r.tilde_rank) {
    j["pd_tilde"] = {{"rank", *r.tilde_rank},
                     {"perm_columns", *r.tilde_perm_columns},
                     {"tightness", tightness_json(*r.tilde_tightness)}};
  }
  if (r.symbolic_rank_bound) {
    j["ndcg_symbolic"] = {{"rank_bound", *r.symbolic_rank_bound},
                          {"affdim_bound", *r.symbolic_affdim_bound}};
  }
  if (with_matrix) j["loss"] = loss_json(r.matrix);
  return j;
}

}  // namespace calib::io

#endif  // CALIB_IO_JSON_HPP_
