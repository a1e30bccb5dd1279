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


#ifndef CALIB_CLI_HPP_
#define CALIB_CLI_HPP_

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "calib/calibration.hpp"
#include "calib/ccdim.hpp"
#include "calib/error.hpp"
#include "calib/io/json.hpp"
#include "calib/losses.hpp"
#include "calib/ranking.hpp"
#include "calib/report.hpp"
#include "calib/surrogate.hpp"

namespace calib::cli {

struct Options {
  std::string loss;
  std::string surrogate;
  std::string points;
  std::string out;
  std::size_t n = 3;
  std::size_t r = 2;
  std::size_t s = 2;
  std::string eps = "1/4";
  bool decimal = false;
  bool table = false;
};

// Named generator, or a path to a JSON / CSV loss file.
inline LossMatrix resolve_loss(const Options& o) {
  const std::string& name = o.loss;
  if (name.empty()) throw InputError("--loss is required");
  if (name == "zero_one" || name == "0-1") return zero_one(o.n);
  if (name == "ordinal" || name == "ord") return ordinal(o.n);
  if (name == "hamming" || name == "ham") return hamming(o.r);
  if (name == "abstain" || name == "?") return abstain(o.n);
  if (name == "pd") return pd_loss(o.r);
  if (name == "pd_tilde") return pd_loss_tilde(o.r);
  if (name == "map") return map_loss(o.r);
  if (name == "ndcg") return ndcg_loss(o.r, o.s).approximate;
  return io::read_loss_file(name);
}

struct ResolvedSurrogate {
  PLSurrogate surrogate;
  std::vector<Vector> default_points;
};

inline ResolvedSurrogate resolve_surrogate(const Options& o, std::size_t n,
                                           const LossMatrix* loss) {
  const std::string& name = o.surrogate;
  if (name.empty()) throw InputError("--surrogate is required");
  auto with_defaults = [](PLSurrogate s) {
    auto pts = default_points(s);
    return ResolvedSurrogate{std::move(s), std::move(pts)};
  };
  if (name == "crammer_singer" || name == "cs") return with_defaults(crammer_singer(n));
  if (name == "absolute" || name == "abs") return with_defaults(absolute(n));
  if (name == "eps_insensitive" || name == "eps")
    return with_defaults(eps_insensitive(n, parse_rational(o.eps)));
  if (name == "embedding") {
    if (!loss) throw InputError("the embedding surrogate needs --loss");
    auto e = construct_embedding_surrogate(*loss);
    return ResolvedSurrogate{e.to_pl(), e.anchors};
  }
  return with_defaults(io::surrogate_from(io::read_json_file(name)));
}

inline std::vector<Vector> resolve_points(const Options& o, const ResolvedSurrogate& rs) {
  if (!o.points.empty()) return io::points_from(io::read_json_file(o.points));
  if (rs.default_points.empty())
    throw InputError("no default analysis points for this surrogate; pass --points");
  return rs.default_points;
}

inline io::Json decimal_copy(const io::Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('/') == std::string::npos) return j;
    try {
      return to_decimal(parse_rational(s));
    } catch (const InputError&) {
      return j;
    }
  }
  if (j.is_array() || j.is_object()) {
    io::Json c = j;
    for (auto it = c.begin(); it != c.end(); ++it) it.value() = decimal_copy(it.value());
    return c;
  }
  return j;
}

inline io::Json cmd_lossgen(const Options& o) { return io::loss_json(resolve_loss(o)); }

inline io::Json cmd_triggers(const Options& o) {
  LossMatrix L = resolve_loss(o);
  io::Json doc;
  doc["loss"] = L.name().empty() ? io::Json(o.loss) : io::Json(L.name());
  io::Json sets = io::Json::array();
  auto verdicts = validate_columns(L);
  io::Json invalid = io::Json::array();
  for (std::size_t t = 0; t < L.k(); ++t) {
    io::Json e;
    e["t"] = t + 1;
    if (!L.col_labels().empty()) e["label"] = L.col_labels()[t];
    e["valid"] = verdicts[t].valid;
    e["polytope"] = io::polytope_json(trigger_set(L, t));
    sets.push_back(e);
    if (!verdicts[t].valid) invalid.push_back(t + 1);
  }
  doc["triggers"] = sets;
  doc["invalid_columns"] = invalid;
  return doc;
}

inline io::Json cmd_bounds(const Options& o) {
  LossMatrix L = resolve_loss(o);
  io::Json doc;
  doc["loss"] = L.name().empty() ? io::Json(o.loss) : io::Json(L.name());
  doc["report"] = io::ccdim_json(analyze(L));
  return doc;
}

inline io::Json cmd_normals(const Options& o) {
  std::optional<LossMatrix> L;
  if (!o.loss.empty()) L = resolve_loss(o);
  const std::size_t n = L ? L->n() : o.n;
  ResolvedSurrogate rs = resolve_surrogate(o, n, L ? &*L : nullptr);
  io::Json doc;
  doc["surrogate"] = io::surrogate_json(rs.surrogate);
  io::Json results = io::Json::array();
  for (const auto& u : resolve_points(o, rs))
    results.push_back(io::normal_set_json(positive_normal_set(rs.surrogate, u)));
  doc["normal_sets"] = results;
  return doc;
}

inline io::Json cmd_check(const Options& o) {
  LossMatrix L = resolve_loss(o);
  ResolvedSurrogate rs = resolve_surrogate(o, L.n(), &L);
  auto pts = resolve_points(o, rs);
  CalibrationVerdict nec = necessary_check(L, rs.surrogate, pts);
  CalibrationVerdict suf = sufficient_check(L, rs.surrogate, pts);
  CalibrationStatus overall = nec.status == CalibrationStatus::kNotCalibrated
                                  ? CalibrationStatus::kNotCalibrated
                                  : suf.status;
  io::Json doc;
  doc["loss"] = L.name().empty() ? io::Json(o.loss) : io::Json(L.name());
  doc["surrogate"] = rs.surrogate.name().empty() ? io::Json(o.surrogate)
                                                 : io::Json(rs.surrogate.name());
  doc["status"] = to_string(overall);
  if (overall == CalibrationStatus::kCalibrated) {
    io::Json pred = io::Json::array();
    auto table = build_pred(suf);
    for (std::size_t j = 0; j < pts.size(); ++j)
      pred.push_back({{"u", io::vector_json(pts[j])}, {"t", table[j] + 1}});
    doc["pred"] = pred;
  }
  doc["necessary"] = io::verdict_json(nec);
  doc["sufficient"] = io::verdict_json(suf);
  return doc;
}

inline io::Json cmd_construct(const Options& o) {
  LossMatrix L = resolve_loss(o);
  io::Json doc;
  doc["loss"] = L.name().empty() ? io::Json(o.loss) : io::Json(L.name());
  doc["embedding"] = io::embedding_json(construct_embedding_surrogate(L));
  return doc;
}

inline io::Json cmd_ranking(const Options& o) {
  RankingKind kind;
  if (o.loss == "ndcg") kind = RankingKind::kNdcg;
  else if (o.loss == "pd") kind = RankingKind::kPd;
  else if (o.loss == "map") kind = RankingKind::kMap;
  else throw InputError("ranking --loss must be one of ndcg, pd, map");
  return io::ranking_json(ranking_report(kind, o.r, o.s));
}

// Exit codes: 0 success (any verdict), 1 malformed input, 2 cap exceeded or
// requested object infeasible.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calibration geometry and convex calibration dimension toolkit", "calibdim"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<io::Json(const Options&)>;
  std::map<CLI::App*, Handler> handlers;

  auto add = [&](const std::string& verb, const std::string& about, Handler h, bool surrogate) {
    CLI::App* sub = app.add_subcommand(verb, about);
    sub->add_option("--loss", o.loss, "Loss name or path (JSON, or .csv)");
    sub->add_option("--n", o.n, "Number of classes for named losses")->capture_default_str();
    sub->add_option("--r", o.r, "Bits (hamming) or documents (ranking)")->capture_default_str();
    sub->add_option("--s", o.s, "Relevance levels (ndcg)")->capture_default_str();
    if (surrogate) {
      sub->add_option("--surrogate", o.surrogate,
                      "crammer_singer | absolute | eps_insensitive | embedding | path");
      sub->add_option("--eps", o.eps, "Insensitivity for eps_insensitive")->capture_default_str();
      sub->add_option("--points", o.points, "JSON file with analysis points");
    }
    sub->add_option("--out", o.out, "Write the JSON result here");
    sub->add_flag("--decimal", o.decimal, "Add approximate decimal renderings");
    sub->add_flag("--table", o.table, "Print a key=value table instead of JSON");
    handlers[sub] = std::move(h);
  };
  add("lossgen", "Emit a loss matrix as JSON", cmd_lossgen, false);
  add("triggers", "Trigger probability sets of every prediction", cmd_triggers, false);
  add("bounds", "Convex calibration dimension bounds", cmd_bounds, false);
  add("normals", "Positive normal sets of a surrogate at analysis points", cmd_normals, true);
  add("check", "Necessary and sufficient calibration checks", cmd_check, true);
  add("construct", "Affine-embedding calibrated surrogate", cmd_construct, false);
  add("ranking", "Ranking loss generator and dimension report", cmd_ranking, false);

  std::vector<const char*> argv{"calibdim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    io::Json doc;
    for (auto& [sub, h] : handlers)
      if (sub->parsed()) doc = h(o);
    if (o.decimal && !o.table) doc["approximate_decimal"] = decimal_copy(doc);
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) throw InputError("cannot write '" + o.out + "'");
      f << doc.dump(2) << "\n";
    }
    if (o.table) out << render_report(doc, o.decimal);
    else if (o.out.empty()) out << doc.dump(2) << "\n";
    return 0;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const io::Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace calib::cli

#endif  // CALIB_CLI_HPP_
