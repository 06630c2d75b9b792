// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "consas/report.hpp"

using namespace consas;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    lines.push_back(std::string(ok ? "ok   " : "MISS ") + what);
  }
  void info(const std::string& what) { lines.push_back("info " + what); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string where(const CheckResult& r) {
  std::string s = r.id + " " + r.space + " " + r.factor;
  if (!r.immersion.empty()) s += " " + r.immersion;
  return s;
}

double metric(const CheckResult& r, const std::string& key) {
  auto it = r.metrics.find(key);
  return it == r.metrics.end() ? 0.0 : it->second;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig make(std::vector<SpaceSpec> spaces, std::vector<std::string> imms, std::vector<std::string> checks,
               int samples, int probes, double tol) {
  RunConfig c;
  c.spaces = std::move(spaces);
  c.immersions = std::move(imms);
  c.checks = std::move(checks);
  c.samples = samples;
  c.probes = probes;
  c.tol = tol;
  return c;
}

std::vector<SpaceSpec> cross(const std::vector<int>& ns, const std::vector<std::string>& factors) {
  std::vector<SpaceSpec> out;
  for (int n : ns)
    for (const auto& f : factors) out.push_back({"sasakian:n=" + std::to_string(n), f});
  return out;
}

int codim(const std::string& id) {
  const auto e = immersion_catalog(id);
  return 2 * e.ambient_n + 1 - e.immersion.source_dim;
}

const std::vector<std::string> kImmersions = {"invariant_1_in_1", "anti_xaxis_r3",   "anti_y0_plane_r3",
                                              "invariant_1_in_2", "anti_surface_r5", "cr_r5",
                                              "invariant_2_in_3", "cr_r7"};
const std::vector<std::string> kAnti = {"anti_xaxis_r3", "anti_y0_plane_r3", "anti_surface_r5"};

// 1. eq2.1 on models and tilde structures
Outcome structure_validity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rs = run_suite(make(cross({1, 2, 3}, {"const:c=0", "const:c=0.2", "linear_z:a=0.3", "quad:c=0.1"}), {},
                                 {"eq2.1"}, 32, 4, 1e-9));
  const double t = seconds_since(t0);
  double worst = 0;
  for (const auto& r : rs) {
    worst = std::max(worst, r.max_residual);
    o.require(r.pass && r.max_residual <= 1e-9, where(r) + " abs " + fmt(r.max_residual));
  }
  o.require(t <= 5.0, "runtime " + fmt(t) + " s <= 5 s");
  o.info("worst eq2.1 residual " + fmt(worst));
  return o;
}

// 2. eq2.2 and the phi-sectional curvature of the models
Outcome sasakian_oracle() {
  Outcome o;
  const auto rs = run_suite(make(cross({1, 2, 3}, {"const:c=0"}), {}, {"eq2.2"}, 16, 4, 1e-8));
  for (const auto& r : rs) {
    o.require(r.pass, where(r) + " rel " + fmt(r.relative_residual));
    const double lo = metric(r, "phi_sectional_min"), hi = metric(r, "phi_sectional_max");
    o.require(std::abs(lo + 3.0) <= 1e-6 && std::abs(hi + 3.0) <= 1e-6,
              r.space + " phi-sectional in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return o;
}

// 3. connection, curvature, phi and xi transformation laws
Outcome transformation_laws() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rs = run_suite(make(cross({1, 2}, {"const:c=0.3", "linear_z:a=0.1", "linear_z:a=0.5", "quad:c=0.05",
                                                "quad:c=0.2"}),
                                 {}, {"eq2.7", "eq2.8", "eq2.9", "eq2.10"}, 32, 8, 1e-7));
  const double t = seconds_since(t0);
  double worst[4] = {0, 0, 0, 0}, worst_abs = 0;
  for (const auto& r : rs) {
    worst_abs = std::max(worst_abs, r.max_residual);
    const double bound = r.id == "eq2.8" ? 1e-7 : 1e-8;
    const int k = r.id == "eq2.7" ? 0 : r.id == "eq2.8" ? 1 : r.id == "eq2.9" ? 2 : 3;
    worst[k] = std::max(worst[k], r.relative_residual);
    if (!(r.relative_residual <= bound)) o.require(false, where(r) + " rel " + fmt(r.relative_residual));
  }
  o.require(worst[0] <= 1e-8, "eq2.7 worst rel " + fmt(worst[0]));
  o.require(worst[1] <= 1e-7, "eq2.8 worst rel " + fmt(worst[1]));
  o.require(worst[2] <= 1e-8, "eq2.9 worst rel " + fmt(worst[2]));
  o.require(worst[3] <= 1e-8, "eq2.10 worst rel " + fmt(worst[3]) + " (corrected phi-term)");
  o.require(t <= 30.0, "runtime " + fmt(t) + " s <= 30 s");
  o.info("worst absolute residual " + fmt(worst_abs) + " (relative residuals floor absolute ones <= 1e-12 to 0)");
  return o;
}

// 4. Gauss, Codazzi, Ricci on every catalog immersion
Outcome fundamental_equations() {
  Outcome o;
  const auto rs = run_suite(make(cross({1, 2, 3}, {"linear_z:a=0.3", "quad:c=0.1"}), kImmersions,
                                 {"eq2.15", "eq2.16", "eq2.17"}, 16, 4, 1e-7));
  double worst = 0, worst_abs = 0, cov = 0;
  int executed = 0;
  for (const auto& r : rs) {
    if (r.id == "eq2.17") {
      const bool should_run = codim(r.immersion) >= 2;
      if (should_run != r.executed()) o.require(false, where(r) + " unexpected status " + to_string(r.status));
      if (r.executed()) cov = std::max(cov, metric(r, "frame_covariance"));
    }
    if (!r.executed()) continue;
    ++executed;
    worst = std::max(worst, r.relative_residual);
    worst_abs = std::max(worst_abs, r.max_residual);
    if (!r.pass) o.require(false, where(r) + " rel " + fmt(r.relative_residual));
  }
  o.require(worst <= 1e-7, std::to_string(executed) + " executed checks, worst rel " + fmt(worst));
  o.require(cov <= 1e-8, "Ricci residual shift under a rotated normal frame " + fmt(cov));
  o.info("worst absolute residual " + fmt(worst_abs));
  return o;
}

// 5. structure equations on invariant and anti-invariant entries
Outcome structure_equations() {
  Outcome o;
  const std::vector<std::string> imms = {"invariant_1_in_1", "invariant_1_in_2", "invariant_2_in_3", "anti_xaxis_r3",
                                         "anti_y0_plane_r3", "anti_surface_r5"};
  const auto rs = run_suite(make(cross({1, 2, 3}, {"linear_z:a=0.3", "quad:c=0.1"}), imms,
                                 {"eq2.11", "eq2.12", "eq2.13", "eq2.14"}, 16, 4, 1e-7));
  double worst = 0, worst_abs = 0, printed = 0;
  for (const auto& r : rs) {
    if (!r.executed()) continue;
    worst = std::max(worst, r.relative_residual);
    worst_abs = std::max(worst_abs, r.max_residual);
    printed = std::max(printed, r.printed_relative);
    if (!r.pass) o.require(false, where(r) + " rel " + fmt(r.relative_residual));
  }
  o.require(worst <= 1e-7, "worst rel " + fmt(worst) + ", worst abs " + fmt(worst_abs));
  o.info("worst rel of the displays as printed " + fmt(printed) + " (see correction groups)");
  return o;
}

// 6. mean curvature of invariant submanifolds
Outcome minimality() {
  Outcome o;
  for (const char* f : {"linear_z:a=0.3", "quad:c=0.1"}) {
    const auto rs = run_suite(make({{"sasakian:n=2", f}}, {"invariant_1_in_2"}, {"thm3.1"}, 32, 4, 1e-8));
    const auto& r = rs.at(0);
    o.require(r.pass && metric(r, "norm_H") <= 1e-8 && metric(r, "norm_lee_normal") <= 1e-12,
              std::string("tangential grad f (") + f + "): |H| = " + fmt(metric(r, "norm_H")));
  }
  const auto rs = run_suite(make({{"sasakian:n=2", "affine:x2=0.3"}}, {"invariant_1_in_2"}, {"thm3.1"}, 32, 4, 1e-7));
  const auto& r = rs.at(0);
  o.require(r.pass && r.max_residual <= 1e-7 && metric(r, "norm_lee_normal") > 0.1,
            "generic f: |mH - (n'+1/2) omega#perp| = " + fmt(r.max_residual) + " with |omega#perp| = " +
                fmt(metric(r, "norm_lee_normal")));
  o.info("the printed coefficient n'+1/2 closes; |H| = " + fmt(metric(r, "norm_H")));
  return o;
}

// 7. anti-invariant suite
Outcome anti_invariant_suite() {
  Outcome o;
  {
    const auto rs = run_suite(make(cross({1, 2}, {"linear_z:a=0.3", "quad:c=0.1"}), kAnti, {"eq4.1"}, 16, 4, 1e-7));
    double worst = 0;
    for (const auto& r : rs) {
      worst = std::max(worst, r.relative_residual);
      if (!r.pass) o.require(false, where(r) + " rel " + fmt(r.relative_residual));
    }
    o.require(worst <= 1e-7, "eq4.1 worst rel " + fmt(worst));
  }
  {
    auto cfg = make(cross({1, 2}, {"linear_z:a=0.3"}), kAnti, {"eq4.2"}, 16, 4, 1e-7);
    auto rs = run_suite(cfg);
    const auto extra = run_suite(make({{"sasakian:n=1", "affine:x1=0.3,y1=-0.2,z=0.25"}}, {"anti_xaxis_r3"},
                                      {"eq4.2"}, 16, 4, 1e-7));
    rs.insert(rs.end(), extra.begin(), extra.end());
    for (const auto& r : rs) {
      std::string flagged;
      int count = 0;
      for (const auto& g : r.term_groups)
        if (g.flagged) {
          ++count;
          flagged += " " + g.label;
        }
      o.require(r.pass && count <= 1, where(r) + " corrected rel " + fmt(r.relative_residual) + ", flagged:" +
                                          (count ? flagged : std::string(" none")));
    }
    const auto quad = run_suite(make({{"sasakian:n=2", "quad:c=0.1"}}, {"anti_surface_r5"}, {"eq4.2"}, 16, 4, 1e-7));
    std::string flagged;
    for (const auto& g : quad.at(0).term_groups)
      if (g.flagged) flagged += " " + g.label;
    o.info("quad factor on anti_surface_r5 flags:" + flagged + " (lee normal part outside phi(TM))");
  }
  {
    const auto rs = run_suite(make(cross({1, 2}, {"linear_z:a=0.3", "quad:c=0.1"}),
                                   {"anti_y0_plane_r3", "anti_surface_r5"}, {"prop4.2"}, 8, 4, 1e-7));
    for (const auto& r : rs)
      o.require(r.pass && metric(r, "equivalence_violations") == 0,
                where(r) + ": flat normal <=> phi condition violated at " +
                    std::to_string(static_cast<int>(metric(r, "equivalence_violations"))) + "/" +
                    std::to_string(r.samples) + " samples; |Rperp| max " + fmt(metric(r, "normal_curvature_max")) +
                    ", phi(TM) block max " + fmt(metric(r, "normal_curvature_phi_block_max")) +
                    ", phi condition defect max " + fmt(metric(r, "phi_condition_defect_max")));
    const auto flat = run_suite(make({{"sasakian:n=2", "linear_z:a=0.3"}}, {"anti_surface_r5:kappa=0"}, {"prop4.2"},
                                     8, 4, 1e-7));
    o.info("anti_surface_r5:kappa=0 (flat normal bundle): equivalence violations " +
           std::to_string(static_cast<int>(metric(flat.at(0), "equivalence_violations"))));
  }
  {
    const auto rs =
        run_suite(make(cross({1}, {"const:c=0.2", "linear_z:a=0.3", "quad:c=0.1"}), {"anti_xaxis_r3"}, {"thm4.3"}, 16, 4,
                       1e-8));
    for (const auto& r : rs)
      o.require(r.pass && metric(r, "normal_curvature_max") <= 1e-8,
                where(r) + " |Rperp| " + fmt(metric(r, "normal_curvature_max")) + ", contraction rel " +
                    fmt(metric(r, "contraction")));
  }
  return o;
}

// 8. CR suite
Outcome cr_suite() {
  Outcome o;
  for (const char* f : {"linear_z:a=0.3", "affine:y2=0.3"}) {
    const auto rs = run_suite(make({{"sasakian:n=3", f}}, {"cr_r7"}, {"thm5.1"}, 16, 4, 1e-8));
    const auto& r = rs.at(0);
    o.require(r.pass && r.max_residual <= 1e-8 && metric(r, "bracket_projection") <= 1e-8 &&
                  metric(r, "dPhi_tilde") <= 1e-8,
              where(r) + " abs " + fmt(r.max_residual));
  }
  const auto rs = run_suite(make({{"sasakian:n=3", "affine:y2=0.3"}}, {"cr_r7"}, {"thm5.3"}, 16, 4, 1e-7));
  const auto& r = rs.at(0);
  o.require(r.status == CheckStatus::applicable, where(r) + " Lee vector normal: " + to_string(r.status));
  o.require(r.pass && metric(r, "eq5.2") <= 1e-7, "eq5.2 rel " + fmt(metric(r, "eq5.2")));
  o.require(metric(r, "equivalence_violations") == 0,
            "mixed geodesic <=> geodesic leaves, violations " +
                std::to_string(static_cast<int>(metric(r, "equivalence_violations"))));
  o.require(metric(r, "eq5.1_nested") <= 1e-7, "nested leaf oracle rel " + fmt(metric(r, "eq5.1_nested")));
  return o;
}

// 9. fault injection
Outcome fault_injection() {
  Outcome o;
  const auto clean = run_suite(make({{"sasakian:n=1", "const:c=0.2"}}, {}, {"eq2.1", "eq2.2"}, 8, 4, 1e-7));
  for (const auto& r : clean) o.require(r.pass, "control " + where(r) + " passes");
  for (const char* model : {"sasakian:n=1,phi_scale=1.01", "sasakian:n=1,g_perturb=0.01",
                            "sasakian:n=2,phi_scale=1.01", "sasakian:n=2,g_perturb=0.01"}) {
    const auto rs = run_suite(make({{model, "const:c=0.2"}}, {}, {"eq2.1", "eq2.2"}, 8, 4, 1e-7));
    for (const auto& r : rs)
      o.require(!r.pass && r.relative_residual >= 1e-4, where(r) + " fails, rel " + fmt(r.relative_residual));
    o.require(suite_exit_code(rs) == 1, std::string(model) + " suite exit code 1");
  }
  return o;
}

// 10. determinism
Outcome determinism() {
  Outcome o;
  auto cfg = make(cross({2}, {"quad:c=0.1", "linear_z:a=0.3"}), {"invariant_1_in_2", "anti_surface_r5", "cr_r5"},
                  {"all"}, 4, 3, 1e-7);
  const std::string a = emit(Report{cfg, run_suite(cfg)}, false);
  setenv("VERIFY_THREADS", "1", 1);
  const std::string b = emit(Report{cfg, run_suite(cfg)}, false);
  unsetenv("VERIFY_THREADS");
  o.require(a == b, "two runs (default threads vs one thread) byte-identical, " + std::to_string(a.size()) + " bytes");
  const Report back = parse_report(emit(Report{cfg, run_suite(cfg)}));
  o.require(emit(back, false) == a, "report survives a JSON round trip");
  return o;
}

// 11. default suite wall time
Outcome default_suite_time() {
  Outcome o;
  const RunConfig cfg = default_suite();
  const auto t0 = std::chrono::steady_clock::now();
  const auto rs = run_suite(cfg);
  const double t = seconds_since(t0);
  int executed = 0, failed = 0;
  for (const auto& r : rs) {
    executed += r.executed();
    if (r.executed() && !r.pass) {
      ++failed;
      o.info("failing: " + where(r));
    }
  }
  o.require(t <= 120.0, "default suite " + fmt(t) + " s with " + std::to_string(thread_count()) + " threads, " +
                            std::to_string(rs.size()) + " jobs, " + std::to_string(executed) + " executed, " +
                            std::to_string(failed) + " failing");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"structure validity (eq2.1)", structure_validity},
      {"Sasakian model oracle (eq2.2, phi-sectional -3)", sasakian_oracle},
      {"conformal transformation laws (eq2.7-eq2.10)", transformation_laws},
      {"Gauss, Codazzi, Ricci (eq2.15-eq2.17)", fundamental_equations},
      {"structure equations (eq2.11-eq2.14)", structure_equations},
      {"minimality of invariant submanifolds (thm3.1)", minimality},
      {"anti-invariant suite (eq4.1, eq4.2, prop4.2, thm4.3)", anti_invariant_suite},
      {"CR suite (thm5.1, thm5.3)", cr_suite},
      {"fault injection", fault_injection},
      {"determinism", determinism},
      {"default suite wall time", default_suite_time},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds_since(t0));
    for (const auto& l : o.lines) std::printf("    %s\n", l.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
