#pragma once

// JSON report.  `seconds` is the only non-deterministic field; emit with
// with_timing = false to compare runs byte for byte.

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "consas/identities.hpp"

namespace consas {

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;

  bool operator==(const Report&) const = default;
};

// Sign and normalisation choices every number in a report depends on.
inline nlohmann::json conventions() {
  return {
      {"curvature_sign", "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z; R(X,Y,Z,W) = g(R(X,Y)Z,W)"},
      {"deta_norm", kDetaNormalisation},
      {"d_two_form", "unnormalised cyclic sum"},
      {"normality_sign", kNormalitySign},
      {"normal_orientation",
       "Gram-Schmidt in g of greedily chosen coordinate directions; h = (nabla_X Y)^perp, A_N X = -(nabla_X N)^T"},
      {"phi_model", "phi d_x = -d_y, phi d_y = d_x + y d_z, phi d_z = 0"},
  };
}

inline void to_json(nlohmann::json& j, const SpaceSpec& s) { j = {{"model", s.model}, {"factor", s.factor}}; }
inline void from_json(const nlohmann::json& j, SpaceSpec& s) {
  j.at("model").get_to(s.model);
  s.factor = j.value("factor", std::string("const:c=0"));
}

inline void to_json(nlohmann::json& j, const RunConfig& c) {
  j = {{"spaces", c.spaces},   {"immersions", c.immersions}, {"checks", c.checks}, {"samples", c.samples},
       {"probes", c.probes},   {"seed", c.seed},             {"tol", c.tol},       {"report_path", c.report_path}};
}

// Missing keys keep their defaults so a config file may be partial.
inline void from_json(const nlohmann::json& j, RunConfig& c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    static const std::vector<std::string> known = {"spaces", "immersions", "checks", "samples",
                                                   "probes", "seed",       "tol",    "report_path"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown config key '" + key + "'");
  }
  if (j.contains("spaces")) j.at("spaces").get_to(c.spaces);
  if (j.contains("immersions")) j.at("immersions").get_to(c.immersions);
  if (j.contains("checks")) j.at("checks").get_to(c.checks);
  if (j.contains("samples")) j.at("samples").get_to(c.samples);
  if (j.contains("probes")) j.at("probes").get_to(c.probes);
  if (j.contains("seed")) j.at("seed").get_to(c.seed);
  if (j.contains("tol")) j.at("tol").get_to(c.tol);
  if (j.contains("report_path")) j.at("report_path").get_to(c.report_path);
}

inline void to_json(nlohmann::json& j, const GroupStat& g) {
  j = {{"label", g.label}, {"max_residual", g.max_residual}, {"correction", g.correction}, {"flagged", g.flagged}};
}
inline void from_json(const nlohmann::json& j, GroupStat& g) {
  j.at("label").get_to(g.label);
  j.at("max_residual").get_to(g.max_residual);
  j.at("correction").get_to(g.correction);
  j.at("flagged").get_to(g.flagged);
}

inline nlohmann::json check_json(const CheckResult& r, bool with_timing) {
  nlohmann::json j = {{"id", r.id},
                      {"space", r.space},
                      {"factor", r.factor},
                      {"immersion", r.immersion},
                      {"status", to_string(r.status)},
                      {"applicable", r.applicable()},
                      {"note", r.note},
                      {"samples", r.samples},
                      {"evaluations", r.evaluations},
                      {"max_residual", r.max_residual},
                      {"mean_residual", r.mean_residual},
                      {"relative_residual", r.relative_residual},
                      {"printed_relative", r.printed_relative},
                      {"pass", r.pass},
                      {"term_groups", r.term_groups},
                      {"metrics", r.metrics}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

inline void to_json(nlohmann::json& j, const CheckResult& r) { j = check_json(r, true); }
inline void from_json(const nlohmann::json& j, CheckResult& r) {
  j.at("id").get_to(r.id);
  j.at("space").get_to(r.space);
  j.at("factor").get_to(r.factor);
  j.at("immersion").get_to(r.immersion);
  r.status = status_from_string(j.at("status").get<std::string>());
  j.at("note").get_to(r.note);
  j.at("samples").get_to(r.samples);
  j.at("evaluations").get_to(r.evaluations);
  j.at("max_residual").get_to(r.max_residual);
  j.at("mean_residual").get_to(r.mean_residual);
  j.at("relative_residual").get_to(r.relative_residual);
  j.at("printed_relative").get_to(r.printed_relative);
  j.at("pass").get_to(r.pass);
  j.at("term_groups").get_to(r.term_groups);
  j.at("metrics").get_to(r.metrics);
  r.seconds = j.value("seconds", 0.0);
}

inline nlohmann::json report_json(const Report& rep, bool with_timing = true) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rep.checks) checks.push_back(check_json(r, with_timing));
  return {{"conventions", conventions()}, {"config", rep.config}, {"checks", checks}};
}

inline std::string emit(const Report& rep, bool with_timing = true) { return report_json(rep, with_timing).dump(2); }

inline Report parse_report(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Report rep;
  j.at("config").get_to(rep.config);
  j.at("checks").get_to(rep.checks);
  return rep;
}

inline void write_report(const Report& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
  out << emit(rep) << '\n';
}

}  // namespace consas
