// verify: run identity checks over catalog spaces and immersions.
//
//   verify --space sasakian:n=2 --factor linear_z:a=0.3 --immersion invariant_1_in_2
//          --checks all --samples 32 --seed 42 --tol 1e-6 --report out.json
//
// Exit 0 when every executed check passes, 1 on a failing check, 2 on a
// configuration error.  Without --space (and no spaces in --config) the
// default suite runs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "consas/report.hpp"

namespace {

using namespace consas;

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

// Check ids never contain commas, so those may be comma-separated too.
std::vector<std::string> split_ids(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

void print_list() {
  std::printf("checks:\n");
  for (const auto& c : check_registry())
    std::printf("  %-8s %s%s\n", c.id.c_str(), c.summary.c_str(), c.needs_immersion ? " [immersion]" : "");
  std::printf("spaces:\n  sasakian:n=1|2|3[,phi_scale=s][,g_perturb=e]\n");
  std::printf("factors:\n  const:c=..  linear_z:a=..  quad:c=..  affine:x1=..,y1=..,z=..\n");
  std::printf("immersions:\n");
  std::printf("  invariant_<k>_in_<n> (1 <= k <= n <= 3)\n");
  std::printf("  anti_xaxis_r3\n  anti_y0_plane_r3\n  anti_surface_r5[:kappa=..]\n  cr_r5\n  cr_r7\n");
}

void print_result(const CheckResult& r) {
  const char* verdict = !r.executed() ? "n/a " : (r.pass ? "PASS" : "FAIL");
  std::string where = r.space + " " + r.factor;
  if (!r.immersion.empty()) where += " " + r.immersion;
  std::printf("%s %-8s %-48s rel %.2e abs %.2e", verdict, r.id.c_str(), where.c_str(), r.relative_residual,
              r.max_residual);
  if (r.status != CheckStatus::applicable) std::printf("  [%s]", to_string(r.status));
  if (!r.note.empty()) std::printf("  %s", r.note.c_str());
  std::printf("\n");
  for (const auto& g : r.term_groups)
    if (g.flagged) std::printf("       group %s deviates by %.2e\n", g.label.c_str(), g.max_residual);
}

int run(int argc, char** argv) {
  CLI::App app{"Numerical verification of conformal Sasakian identities"};
  std::vector<std::string> spaces, factors, immersions, checks;
  std::string config_path, report_path;
  int samples = 0, probes = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool list = false;
  app.add_option("--space", spaces, "model id, e.g. sasakian:n=2 (repeatable, ';'-separated)");
  app.add_option("--factor", factors, "conformal factor, e.g. linear_z:a=0.3 (repeatable, ';'-separated)");
  app.add_option("--immersion", immersions, "catalog immersion id (repeatable, ';'-separated)");
  app.add_option("--checks", checks, "check ids or 'all' (comma-separated)");
  auto* o_samples = app.add_option("--samples", samples, "sample points per check");
  auto* o_probes = app.add_option("--probes", probes, "probe tuples per sample");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_tol = app.add_option("--tol", tol, "relative tolerance");
  app.add_option("--report", report_path, "write JSON report here");
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_flag("--list", list, "print check registry and catalog ids");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (list) {
    print_list();
    return 0;
  }

  RunConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config '" + config_path + "'");
    try {
      nlohmann::json::parse(in).get_to(cfg);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed config: ") + e.what());
    }
  }
  spaces = split_list(spaces);
  factors = split_list(factors);
  if (!spaces.empty()) {
    if (factors.empty()) factors.push_back("const:c=0");
    cfg.spaces.clear();
    for (const auto& s : spaces)
      for (const auto& f : factors) cfg.spaces.push_back({s, f});
  } else if (!factors.empty()) {
    if (cfg.spaces.empty()) cfg.spaces = default_suite().spaces;
    std::vector<SpaceSpec> crossed;
    for (const auto& s : cfg.spaces) {
      bool seen = false;
      for (const auto& c : crossed) seen = seen || c.model == s.model;
      if (!seen)
        for (const auto& f : factors) crossed.push_back({s.model, f});
    }
    cfg.spaces = crossed;
  }
  if (!immersions.empty()) cfg.immersions = split_list(immersions);
  if (!checks.empty()) cfg.checks = split_ids(checks);
  if (*o_samples) cfg.samples = samples;
  if (*o_probes) cfg.probes = probes;
  if (*o_seed) cfg.seed = seed;
  if (*o_tol) cfg.tol = tol;
  if (!report_path.empty()) cfg.report_path = report_path;
  if (cfg.spaces.empty()) {
    const RunConfig d = default_suite();
    cfg.spaces = d.spaces;
    if (cfg.immersions.empty()) cfg.immersions = d.immersions;
  }

  Report rep{cfg, run_suite(cfg)};
  for (const auto& r : rep.checks) print_result(r);
  int executed = 0, failed = 0;
  for (const auto& r : rep.checks) {
    executed += r.executed();
    failed += r.executed() && !r.pass;
  }
  std::printf("%d checks run, %d failed, %zu not applicable\n", executed, failed, rep.checks.size() - executed);
  if (!cfg.report_path.empty() && !rep.checks.empty()) write_report(rep, cfg.report_path);
  return suite_exit_code(rep.checks);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const consas::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
