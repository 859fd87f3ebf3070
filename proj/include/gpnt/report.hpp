#pragma once

// JSON renderings of engine results. Infinite scales are written as "inf".

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "gpnt/bound.hpp"
#include "gpnt/cover_io.hpp"
#include "gpnt/interleaving.hpp"
#include "gpnt/persistence.hpp"

namespace gpnt {

using Json = nlohmann::ordered_json;

inline Json scale_json(Scale s) {
  if (std::isinf(s)) return s > 0 ? "inf" : "-inf";
  return s;
}

inline Json diagram_json(const PersistenceDiagram& d) {
  Json bars = Json::array();
  for (const auto& b : d.bars) bars.push_back(Json{{"dim", b.dim}, {"birth", scale_json(b.birth)}, {"death", scale_json(b.death)}});
  return bars;
}

inline std::string diagram_csv(const PersistenceDiagram& d) {
  std::string out = "dim,birth,death\n";
  for (const auto& b : d.bars)
    out += std::to_string(b.dim) + "," + format_decimal(b.birth) + "," + format_decimal(b.death) + "\n";
  return out;
}

inline Json goodness_json(const GoodnessReport& g) {
  Json j;
  j["maxDim"] = g.max_dim;
  j["epsilonStar"] = scale_json(g.epsilon_star);
  Json w = Json::array();
  for (const auto& x : g.witnesses)
    w.push_back(Json{{"v", to_string(x.v)}, {"dim", x.dim}, {"birth", scale_json(x.birth)}, {"death", scale_json(x.death)}});
  j["witnesses"] = w;
  Json per = Json::object();
  for (const auto& [v, m] : g.per_v) per[to_string(v)] = scale_json(m);
  j["perV"] = per;
  return j;
}

inline Json bound_json(const BoundReport& r) {
  Json j;
  j["K"] = r.K;
  j["epsilonStar"] = scale_json(r.epsilon_star);
  Json w = Json::array();
  for (const auto& x : r.goodness.witnesses)
    w.push_back(Json{{"v", to_string(x.v)}, {"dim", x.dim}, {"birth", scale_json(x.birth)}, {"death", scale_json(x.death)}});
  j["witnesses"] = w;
  j["dB"] = scale_json(r.dB);
  j["bound"] = scale_json(r.bound);
  j["verdict"] = r.verdict ? "pass" : "fail";
  Json per = Json::array();
  for (Scale d : r.per_dim_dB) per.push_back(scale_json(d));
  j["dBPerDim"] = per;
  j["t"] = scale_json(r.t);
  j["shiftedDB"] = scale_json(r.shifted_dB);
  j["shiftedBound"] = scale_json(r.shifted_bound);
  j["shiftedVerdict"] = r.shifted_verdict ? "pass" : "fail";
  j["blowupEqualsSpace"] = r.blowup_matches_space;
  j["flagEqualsNerve"] = r.flag_matches_nerve;
  j["diagrams"] = Json{{"space", diagram_json(r.diagrams.space)},
                       {"nerve", diagram_json(r.diagrams.nerve)},
                       {"blowup", diagram_json(r.diagrams.blowup)},
                       {"shiftedNerve", diagram_json(r.shifted_nerve)}};
  return j;
}

inline Json verification_json(const VerificationReport& rep) {
  Json j;
  j["allPass"] = rep.all_pass();
  Json results = Json::array();
  for (const auto& r : rep.results) {
    Json x{{"identity", r.id}, {"name", r.name}, {"alpha", scale_json(r.alpha)}, {"pass", r.verdict.ok}};
    if (!r.verdict.ok) x["firstViolation"] = Json{{"dim", r.verdict.dim}, {"cell", r.verdict.cell}, {"detail", r.verdict.detail}};
    results.push_back(x);
  }
  j["results"] = results;
  return j;
}

inline Json not_eps_good_json(const NotEpsGood& e) {
  return Json{{"v", to_string(e.v())}, {"alpha", scale_json(e.alpha())}, {"dim", e.dim()}, {"cell", e.cell()}};
}

}  // namespace gpnt
