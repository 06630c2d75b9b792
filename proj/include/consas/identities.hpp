#pragma once

// Named checks, one per identity or theorem, and the suite runner.
//
// A check draws seeded sample points (ambient or source), evaluates the
// relevant relations on random probe tuples and folds every residual into a
// Tally.  Pass/fail is decided on the relative residual of the corrected
// relation; printed residuals and per-group deviations are reported
// alongside so that a misprint shows up as a flagged group.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "consas/catalog.hpp"
#include "consas/equations.hpp"

namespace consas {

enum class CheckStatus { applicable, not_applicable, hypothesis_failure };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::applicable: return "applicable";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::hypothesis_failure: return "hypothesis_failure";
  }
  return "?";
}

inline CheckStatus status_from_string(const std::string& s) {
  if (s == "applicable") return CheckStatus::applicable;
  if (s == "not_applicable") return CheckStatus::not_applicable;
  if (s == "hypothesis_failure") return CheckStatus::hypothesis_failure;
  throw ConfigError("unknown check status '" + s + "'");
}

// One reported term group.  For printed groups `max_residual` is the largest
// relative size of the corrections attached to it (zero when the group closes
// as printed); correction-only groups report their own relative size.
struct GroupStat {
  std::string label;
  double max_residual = 0.0;
  bool correction = false;
  bool flagged = false;

  bool operator==(const GroupStat&) const = default;
};

struct CheckResult {
  std::string id, space, factor, immersion;
  CheckStatus status = CheckStatus::applicable;
  std::string note;
  int samples = 0;
  long evaluations = 0;
  double max_residual = 0.0;       // absolute, corrected
  double mean_residual = 0.0;      // absolute, corrected
  double relative_residual = 0.0;  // max relative, corrected; decides pass
  double printed_relative = 0.0;   // max relative of the displays as printed
  bool pass = false;
  std::vector<GroupStat> term_groups;
  std::map<std::string, double> metrics;
  double seconds = 0.0;

  bool applicable() const { return status == CheckStatus::applicable; }
  // Counts towards the exit status.
  bool executed() const { return status != CheckStatus::not_applicable; }

  bool operator==(const CheckResult&) const = default;
};

class Tally {
 public:
  explicit Tally(double tol) : tol_(tol) {}

  // Fold one evaluated relation.  A non-empty `name` prefixes its group
  // labels and records its own worst relative residual as a metric.
  void relation(const std::string& name, const Relation& r) {
    const double scale = r.scale();
    const double abs_c = max_abs(r.corrected_defect());
    const double abs_p = max_abs(r.printed_defect());
    record(name, abs_c, relative_residual(abs_c, scale), relative_residual(abs_p, scale));
    const std::string pre = name.empty() ? "" : name + "/";
    for (const auto& t : r.rhs) group(pre + t.label, false);
    for (const auto& t : r.corrections) {
      const double rel = relative_residual(max_abs(t.value), scale);
      const auto colon = t.label.find(':');
      bool attached = false;
      if (colon != std::string::npos) {
        const std::string owner = t.label.substr(0, colon);
        for (const auto& g : r.rhs)
          if (g.label == owner) attached = true;
        if (attached) bump(group(pre + owner, false), rel);
      }
      if (!attached) bump(group(pre + t.label, true), rel);
    }
  }

  // A scalar residual with its own scale (relative = abs / scale).
  void scalar(const std::string& name, double abs_residual, double scale) {
    const double rel = relative_residual(abs_residual, scale);
    record(name, abs_residual, rel, rel);
  }

  // Informational value, max-aggregated.
  void metric(const std::string& name, double v) {
    auto it = metrics_.find(name);
    if (it == metrics_.end()) metrics_[name] = v;
    else it->second = std::max(it->second, v);
  }
  void set_metric(const std::string& name, double v) { metrics_[name] = v; }

  void status(CheckStatus s, std::string note) {
    status_ = s;
    note_ = std::move(note);
  }
  CheckStatus status() const { return status_; }

  void finish(CheckResult& out) const {
    out.status = status_;
    out.note = note_;
    out.evaluations = count_;
    out.max_residual = max_abs_;
    out.mean_residual = count_ > 0 ? sum_abs_ / static_cast<double>(count_) : 0.0;
    out.relative_residual = max_rel_;
    out.printed_relative = max_printed_;
    out.term_groups = groups_;
    for (auto& g : out.term_groups) g.flagged = g.max_residual > tol_;
    out.metrics = metrics_;
    out.pass = status_ != CheckStatus::not_applicable && max_rel_ <= tol_;
  }

 private:
  void record(const std::string& name, double abs_c, double rel_c, double rel_p) {
    ++count_;
    sum_abs_ += abs_c;
    max_abs_ = std::max(max_abs_, abs_c);
    max_rel_ = std::max(max_rel_, rel_c);
    max_printed_ = std::max(max_printed_, rel_p);
    if (!name.empty()) {
      metric(name, rel_c);
      if (rel_p != rel_c) metric(name + ".printed", rel_p);
    }
  }
  GroupStat& group(const std::string& label, bool correction) {
    for (auto& g : groups_)
      if (g.label == label) return g;
    groups_.push_back(GroupStat{label, 0.0, correction, false});
    return groups_.back();
  }
  static void bump(GroupStat& g, double v) { g.max_residual = std::max(g.max_residual, v); }

  double tol_;
  CheckStatus status_ = CheckStatus::applicable;
  std::string note_;
  long count_ = 0;
  double sum_abs_ = 0.0, max_abs_ = 0.0, max_rel_ = 0.0, max_printed_ = 0.0;
  std::vector<GroupStat> groups_;
  std::map<std::string, double> metrics_;
};

struct CheckContext {
  const ConformalSasakianSpace* space = nullptr;
  const CatalogImmersion* entry = nullptr;  // null for ambient checks
  NormalFrameChoice frame;
  Rng rng;
  int samples = 16;
  int probes = 4;
  double tol = 1e-7;

  Point ambient_sample() { return space->base.chart.domain.sample(rng); }
  Point source_sample() { return entry->immersion.domain.sample(rng); }
  SubmanifoldPoint at(const Point& src) const { return SubmanifoldPoint(*space, entry->immersion, src, frame); }
  Vec random(int n) {
    Vec v(n);
    for (double& c : v) c = uniform(rng, -1.0, 1.0);
    return v;
  }
  // Random combination of the given vectors.
  Vec random_in(const std::vector<Vec>& span, int n) {
    Vec v(n, 0.0);
    for (const Vec& b : span) v += uniform(rng, -1.0, 1.0) * b;
    return v;
  }
};

using CheckFn = std::function<void(CheckContext&, Tally&)>;

struct CheckInfo {
  std::string id;
  bool needs_immersion = false;
  std::string summary;
  CheckFn fn;
};

namespace checks {

inline Vec flatten(const Matrix<double>& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// g'-orthonormal frame of the source tangent space (Gram-Schmidt on the
// coordinate basis).
inline std::vector<Vec> orthonormal_frame(const SubmanifoldPoint& sp) {
  std::vector<Vec> out;
  const int m = sp.dim();
  for (int i = 0; i < m; ++i) {
    Vec v = basis_vector(m, i);
    for (const Vec& b : out) v -= sp.gi(b, v) * b;
    out.push_back((1.0 / std::sqrt(sp.gi(v, v))) * v);
  }
  return out;
}

inline double tnorm(const SubmanifoldPoint& sp, const Vec& v) { return std::sqrt(std::max(0.0, sp.gi(v, v))); }

// Classification over this check's sample count (own seed, not the check's stream).
inline Classification classify_entry(const CheckContext& c) {
  return classify(*c.space, c.entry->immersion, std::min(c.samples, 4), 7);
}

// --- ambient ---------------------------------------------------------------

inline void eq2_1(CheckContext& c, Tally& t) {
  for (int s = 0; s < c.samples; ++s) {
    const Point p = c.ambient_sample();
    const std::pair<const char*, const AlmostContactStructure*> structures[] = {{"tilde", &c.space->tilde},
                                                                                {"base", &c.space->base}};
    for (const auto& [name, acs] : structures) {
      const AlmostContactResiduals r = verify_almost_contact(*acs, p);
      const std::string pre(name);
      t.scalar(pre + ".phi_square", r.phi_square, 1.0);
      t.scalar(pre + ".eta_xi", r.eta_xi, 1.0);
      t.scalar(pre + ".compatibility", r.compatibility, 1.0);
      t.scalar(pre + ".eta_phi", r.eta_phi, 1.0);
    }
  }
}

inline void eq2_2(CheckContext& c, Tally& t) {
  const int n = c.space->tilde.chart.dim;
  const TensorField Phi_t = fundamental_two_form_field(c.space->tilde);
  double k_min = 1e300, k_max = -1e300;
  for (int s = 0; s < c.samples; ++s) {
    const Point p = c.ambient_sample();
    const StructureAtPoint st(c.space->tilde, p);
    const auto& geo = st.geometry();
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random(n), y = c.random(n), z = c.random(n);
      Relation sas;
      sas.lhs = st.nabla_phi(x, y);
      sas.add("g_xi", st.g(x, y) * st.xi());
      sas.add("eta_X", -st.eta(y) * x);
      t.relation("sasakian", sas);

      const double palais = st.d_eta_along(x, y) - st.d_eta_along(y, x);
      Relation normal;
      normal.lhs = nijenhuis_torsion(st, x, y);
      normal.add("deta_xi", -(kNormalitySign * 2.0 * kDetaNormalisation * palais) * st.xi());
      t.relation("normality", normal);

      Relation contact = scalar_relation(kDetaNormalisation * palais);
      contact.add("Phi", Vec{st.Phi(x, y)});
      t.relation("contact_form", contact);

      Relation rxi;
      rxi.lhs = geo.riemann(x, y, st.xi());
      rxi.add("eta_Y_X", st.eta(y) * x);
      rxi.add("eta_X_Y", -st.eta(x) * y);
      t.relation("curvature_xi", rxi);

      t.scalar("closed_Phi", std::abs(exterior_derivative_2form(Phi_t, p, x, y, z)), 1.0);

      // phi-sectional curvature of a unit horizontal vector
      Vec h = x - st.eta(x) * st.xi();
      h = (1.0 / std::sqrt(st.g(h, h))) * h;
      const Vec ph = st.phi(h);
      const double K = geo.curvature_4(h, ph, ph, h);
      k_min = std::min(k_min, K);
      k_max = std::max(k_max, K);
      t.scalar("phi_sectional", std::abs(K + 3.0), 3.0);
    }
  }
  t.set_metric("phi_sectional_min", k_min);
  t.set_metric("phi_sectional_max", k_max);
}

inline void eq2_6(CheckContext& c, Tally& t) {
  const int n = c.space->tilde.chart.dim;
  for (int s = 0; s < c.samples; ++s) {
    const Point p = c.ambient_sample();
    const ConformalPoint cp(*c.space, p);
    const auto& b = cp.base();
    const auto& tl = cp.tilde();
    const double ef = std::exp(cp.f());
    Relation g;
    g.lhs = flatten(tl.geometry().g());
    g.add("exp_f_g", ef * flatten(b.geometry().g()));
    t.relation("metric", g);
    Relation eta;
    eta.lhs = tl.eta_form();
    eta.add("exp_half_f_eta", cp.exp_half_f() * b.eta_form());
    t.relation("eta", eta);
    Relation xi;
    xi.lhs = tl.xi();
    xi.add("exp_minus_half_f_xi", (1.0 / cp.exp_half_f()) * b.xi());
    t.relation("xi", xi);
    Relation phi;
    phi.lhs = flatten(tl.phi_matrix());
    phi.add("phi", flatten(b.phi_matrix()));
    t.relation("phi", phi);
    t.scalar("eta_xi_tilde", std::abs(tl.eta(tl.xi()) - 1.0), 1.0);

    // Lee data: omega = df closed, omega# dual to omega, B symmetric.
    const Jet f2 = c.space->factor(lift_point(p, 2));
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random(n), y = c.random(n);
      t.relation("lee_dual", [&] {
        Relation r = scalar_relation(cp.g(cp.omega_sharp(), x));
        r.add("omega", Vec{cp.omega(x)});
        return r;
      }());
      double d_omega = 0.0, scale = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double term = x[i] * y[j] * f2.derivative(j).d(i);
          d_omega += term - x[j] * y[i] * f2.derivative(j).d(i);
          scale = std::max(scale, std::abs(term));
        }
      t.scalar("d_omega", std::abs(d_omega), scale);
      Relation bs = scalar_relation(cp.B(x, y));
      bs.add("B_swapped", Vec{cp.B(y, x)});
      t.relation("B_symmetric", bs);
    }
  }
}

template <typename Make>
void ambient_relation_check(CheckContext& c, Tally& t, int vectors, Make make) {
  const int n = c.space->base.chart.dim;
  for (int s = 0; s < c.samples; ++s) {
    const ConformalPoint cp(*c.space, c.ambient_sample());
    for (int k = 0; k < c.probes; ++k) {
      std::vector<Vec> v;
      for (int i = 0; i < vectors; ++i) v.push_back(c.random(n));
      t.relation("", make(cp, v));
    }
  }
}

inline void eq2_7(CheckContext& c, Tally& t) {
  ambient_relation_check(c, t, 2, [](const ConformalPoint& cp, const std::vector<Vec>& v) {
    return connection_relation(cp, v[0], v[1]);
  });
}
inline void eq2_8(CheckContext& c, Tally& t) {
  ambient_relation_check(c, t, 4, [](const ConformalPoint& cp, const std::vector<Vec>& v) {
    return curvature_relation(cp, v[0], v[1], v[2], v[3]);
  });
}
inline void eq2_9(CheckContext& c, Tally& t) {
  ambient_relation_check(c, t, 2, [](const ConformalPoint& cp, const std::vector<Vec>& v) {
    return dphi_relation(cp, v[0], v[1]);
  });
}
inline void eq2_10(CheckContext& c, Tally& t) {
  ambient_relation_check(c, t, 1, [](const ConformalPoint& cp, const std::vector<Vec>& v) {
    return dxi_relation(cp, v[0]);
  });
}
inline void eq4_4(CheckContext& c, Tally& t) {
  ambient_relation_check(c, t, 3, [](const ConformalPoint& cp, const std::vector<Vec>& v) {
    return tilde_phi_curvature_relation(cp, v[0], v[1], v[2]);
  });
}

// --- submanifold: fundamental and structure equations -----------------------

template <typename Body>
void per_sample(CheckContext& c, Body body) {
  for (int s = 0; s < c.samples; ++s) {
    const SubmanifoldPoint sp = c.at(c.source_sample());
    for (int k = 0; k < c.probes; ++k) body(sp);
  }
}

inline void eq2_11(CheckContext& c, Tally& t) {
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) { t.relation("", structure_P_relation(sp, c.random(m), c.random(m))); });
}
inline void eq2_12(CheckContext& c, Tally& t) {
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) { t.relation("", structure_F_relation(sp, c.random(m), c.random(m))); });
}

inline bool require_normals(const CheckContext& c, Tally& t, int needed) {
  const int p = static_cast<int>(c.frame.candidates.size());
  if (p >= needed) return true;
  t.status(CheckStatus::not_applicable, "codimension " + std::to_string(p) + " < " + std::to_string(needed));
  return false;
}

inline void eq2_13(CheckContext& c, Tally& t) {
  if (!require_normals(c, t, 1)) return;
  const int m = c.entry->immersion.source_dim, p = static_cast<int>(c.frame.candidates.size());
  per_sample(c, [&](const SubmanifoldPoint& sp) { t.relation("", structure_t_relation(sp, c.random(m), c.random(p))); });
}
inline void eq2_14(CheckContext& c, Tally& t) {
  if (!require_normals(c, t, 1)) return;
  const int m = c.entry->immersion.source_dim, p = static_cast<int>(c.frame.candidates.size());
  per_sample(c, [&](const SubmanifoldPoint& sp) { t.relation("", structure_f_relation(sp, c.random(m), c.random(p))); });
}

inline void eq2_15(CheckContext& c, Tally& t) {
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) {
    t.relation("", gauss_relation(sp, c.random(m), c.random(m), c.random(m), c.random(m)));
  });
}

inline void eq2_16(CheckContext& c, Tally& t) {
  if (!require_normals(c, t, 1)) return;
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) {
    const Vec x = c.random(m), y = c.random(m), z = c.random(m);
    for (int a = 0; a < sp.codim(); ++a) t.relation("", codazzi_relation(sp, a, x, y, z));
  });
}

// Givens rotation of the normal frame in the (0,1) plane.
inline Matrix<double> givens(int p, double angle) {
  Matrix<double> r(p, p);
  for (int i = 0; i < p; ++i) r(i, i) = 1.0;
  r(0, 0) = std::cos(angle);
  r(0, 1) = -std::sin(angle);
  r(1, 0) = std::sin(angle);
  r(1, 1) = std::cos(angle);
  return r;
}

inline void eq2_17(CheckContext& c, Tally& t) {
  if (!require_normals(c, t, 2)) return;
  const int m = c.entry->immersion.source_dim;
  const int p = static_cast<int>(c.frame.candidates.size());
  const Matrix<double> rot = givens(p, 0.7);
  const NormalFrameChoice rotated{c.frame.candidates, rot};
  double covariance = 0.0, residual_shift = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const Point src = c.source_sample();
    const SubmanifoldPoint sp = c.at(src);
    const SubmanifoldPoint sr(*c.space, c.entry->immersion, src, rotated);
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random(m), y = c.random(m);
      double worst = 0.0, worst_rot = 0.0;
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
          if (a == b) continue;
          const Relation r = ricci_relation(sp, a, b, x, y);
          const Relation rr = ricci_relation(sr, a, b, x, y);
          t.relation("", r);
          t.relation("rotated_frame", rr);
          worst = std::max(worst, relative_residual(max_abs(r.corrected_defect()), r.scale()));
          worst_rot = std::max(worst_rot, relative_residual(max_abs(rr.corrected_defect()), rr.scale()));
        }
      residual_shift = std::max(residual_shift, std::abs(worst - worst_rot));
      // R-perp in the rotated frame is rot R-perp rot^T.
      const Matrix<double> M = sp.normal_curvature(x, y), Mr = sr.normal_curvature(x, y);
      const Matrix<double> expect = rot * M * rot.transposed();
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) covariance = std::max(covariance, std::abs(Mr(i, j) - expect(i, j)));
    }
  }
  t.set_metric("frame_covariance", covariance);
  t.set_metric("rotated_residual_shift", residual_shift);
  t.scalar("frame_covariance", covariance, 1.0);
}

// --- invariant submanifolds ---------------------------------------------------

inline bool require_invariant(CheckContext& c, Tally& t) {
  const Classification cl = classify_entry(c);
  if (!cl.invariant || !cl.xi_tangent) {
    t.status(CheckStatus::not_applicable, "needs an invariant submanifold tangent to xi");
    return false;
  }
  return true;
}

inline void eq3_2(CheckContext& c, Tally& t) {
  if (!require_invariant(c, t)) return;
  const int m = c.entry->immersion.source_dim;
  for (int s = 0; s < c.samples; ++s) {
    const SubmanifoldPoint sp = c.at(c.source_sample());
    t.relation("h_xi_xi", invariant_hxi_relation(sp));
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random(m), y = c.random(m);
      t.relation("h_phi", invariant_h_relation(sp, x, y));
      t.relation("h_phi_phi", invariant_hh_relation(sp, x, y));
      // X = Y = xi substitution
      t.relation("h_phi_xi", invariant_h_relation(sp, sp.xi_tan(), sp.xi_tan()));
    }
  }
}

inline void thm3_1(CheckContext& c, Tally& t) {
  if (!require_invariant(c, t)) return;
  const int m = c.entry->immersion.source_dim;
  if (m % 2 == 0) {
    t.status(CheckStatus::not_applicable, "even source dimension");
    return;
  }
  double h_max = 0.0, lee_max = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const SubmanifoldPoint sp = c.at(c.source_sample());
    t.relation("mean_curvature", mean_curvature_relation(sp));
    const Vec H = sp.mean_curvature(), ln = sp.omega_sharp_nor();
    const double hn = std::sqrt(dot(H, H)), lnn = std::sqrt(dot(ln, ln));
    h_max = std::max(h_max, hn);
    lee_max = std::max(lee_max, lnn);
    // minimality when omega# is tangent
    if (lnn <= c.tol) t.scalar("minimal", hn, 1.0);
    // the trace computed in an orthonormal frame against the coordinate trace
    Vec trace(sp.codim(), 0.0);
    for (const Vec& e : orthonormal_frame(sp)) trace += sp.h(e, e);
    Relation fr;
    fr.lhs = (1.0 / m) * trace;
    fr.add("H", H);
    t.relation("frame_trace", fr);
  }
  t.set_metric("norm_H", h_max);
  t.set_metric("norm_lee_normal", lee_max);
}

// --- anti-invariant submanifolds ---------------------------------------------

inline bool require_anti(CheckContext& c, Tally& t, Classification* out = nullptr) {
  const Classification cl = classify_entry(c);
  if (out) *out = cl;
  if (!cl.anti_invariant) {
    t.status(CheckStatus::not_applicable, "needs an anti-invariant submanifold");
    return false;
  }
  return true;
}

inline void eq4_1(CheckContext& c, Tally& t) {
  if (!require_anti(c, t)) return;
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) { t.relation("", anti_shape_relation(sp, c.random(m), c.random(m))); });
}

inline void eq4_2(CheckContext& c, Tally& t) {
  if (!require_anti(c, t)) return;
  const int m = c.entry->immersion.source_dim;
  per_sample(c, [&](const SubmanifoldPoint& sp) {
    const Vec x = c.random(m), y = c.random(m), z = c.random(m), w = c.random(m);
    t.relation("", commutator_relation(sp, x, y, z, w));
    t.relation("", commutator_relation(sp, x, x, z, w));
  });
}

// Largest |R-perp(E_i, E_j)| entry over an orthonormal tangent frame.
inline double normal_curvature_size(const SubmanifoldPoint& sp) {
  const auto e = orthonormal_frame(sp);
  double r = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Matrix<double> M = sp.normal_curvature(e[i], e[j]);
      for (int a = 0; a < M.rows(); ++a)
        for (int b = 0; b < M.cols(); ++b) r = std::max(r, std::abs(M(a, b)));
    }
  return r;
}

// Largest entry of R-perp(E_i, E_j) restricted to phi(TM) x phi(TM), the
// block the flat-normal display can see.
inline double normal_curvature_phi_block(const SubmanifoldPoint& sp) {
  const auto e = orthonormal_frame(sp);
  std::vector<Vec> pe;
  for (const Vec& v : e) pe.push_back(sp.nor_coords(sp.ambient().phi(sp.push(v))));
  double r = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Matrix<double> M = sp.normal_curvature(e[i], e[j]);
      for (const Vec& a : pe)
        for (const Vec& b : pe) r = std::max(r, std::abs(dot(b, mul(M, a))));
    }
  return r;
}

inline void prop4_2(CheckContext& c, Tally& t) {
  Classification cl;
  if (!require_anti(c, t, &cl)) return;
  if (!cl.xi_tangent) {
    t.status(CheckStatus::not_applicable, "needs xi tangent");
    return;
  }
  const int m = c.entry->immersion.source_dim, n = c.space->base.chart.dim;
  long forward = 0, converse = 0, block_violations = 0;
  double flat_max = 0.0, block_max = 0.0, defect_max = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const SubmanifoldPoint sp = c.at(c.source_sample());
    const ConformalPoint& cp = sp.ambient();
    double defect = 0.0;
    for (int k = 0; k < c.probes; ++k) {
      const Vec X = c.random(n), Y = c.random(n), Z = c.random(n);
      t.relation("eq4.4", tilde_phi_curvature_relation(cp, X, Y, Z));
      t.relation("eq4.5", base_phi_curvature_relation(cp, X, Y, Z));
      const Vec x = c.random(m), y = c.random(m), z = c.random(m), w = c.random(m);
      t.relation("eq4.6", normal_phi_curvature_relation(sp, x, y, z, w));
      t.relation("eq4.7", phi_h_symmetry_relation(sp, x, y, z));
      t.relation("eq4.8", normal_curvature_phi_relation(sp, x, y, z));
      const Relation r43 = flat_normal_relation(sp, x, y, z);
      defect = std::max(defect, relative_residual(max_abs(r43.corrected_defect()), r43.scale()));
    }
    // The phi condition is an identity only on flat-normal samples; its defect is tallied
    // through the equivalence, not as a residual.
    const double flat = normal_curvature_size(sp);
    const double block = normal_curvature_phi_block(sp);
    flat_max = std::max(flat_max, flat);
    block_max = std::max(block_max, block);
    defect_max = std::max(defect_max, defect);
    if (flat <= c.tol && defect > c.tol) ++forward;
    if (defect <= c.tol && flat > c.tol) ++converse;
    if ((block <= c.tol) != (defect <= c.tol)) ++block_violations;
  }
  const long violations = forward + converse;
  t.set_metric("forward_violations", static_cast<double>(forward));
  t.set_metric("converse_violations", static_cast<double>(converse));
  t.set_metric("phi_block_equivalence_violations", static_cast<double>(block_violations));
  t.set_metric("normal_curvature_phi_block_max", block_max);
  t.set_metric("normal_curvature_max", flat_max);
  t.set_metric("phi_condition_defect_max", defect_max);
  t.set_metric("equivalence_violations", static_cast<double>(violations));
  t.scalar("equivalence", static_cast<double>(violations), 1.0);
}

// A fixed non-degenerate 2-form on the source used to exercise the trace.
inline double synthetic_theta(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) s += (x[i] * y[j] - x[j] * y[i]) / (1.0 + i + j);
  return s;
}

inline void thm4_3(CheckContext& c, Tally& t) {
  Classification cl;
  if (!require_anti(c, t, &cl)) return;
  const int m = c.entry->immersion.source_dim;
  double rperp = 0.0, rest = 0.0, coef_dev = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const SubmanifoldPoint sp = c.at(c.source_sample());
    const double r = normal_curvature_size(sp);
    rperp = std::max(rperp, r);
    const auto frame = orthonormal_frame(sp);
    const Vec xi = sp.xi_tan();
    const double xi_sq = sp.gi(xi, xi);
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random(m), y = c.random(m);
      const double theta = synthetic_theta(x, y);
      // right side of the recurrent curvature expansion as a map Z -> vector
      auto rhs = [&](const Vec& z) {
        const Relation r43 = flat_normal_relation(sp, x, y, z);
        const Vec non_theta = r43.lhs - r43.corrected_defect();
        return std::pair{non_theta, theta * (z - sp.ambient().eta(sp.push(z)) * xi)};
      };
      double frame_trace = 0.0, rest_trace = 0.0, lhs_trace = 0.0;
      for (const Vec& e : frame) {
        const auto [rest_v, theta_v] = rhs(e);
        frame_trace += sp.gi(rest_v + theta_v, e);
        rest_trace += sp.gi(rest_v, e);
        lhs_trace += sp.gi(sp.induced_riemann(x, y, e), e);
      }
      double direct = 0.0;
      const Matrix<double>& gi_inv = sp.induced_metric_inverse();
      for (int i = 0; i < m; ++i) {
        const auto [rest_v, theta_v] = rhs(basis_vector(m, i));
        const Vec v = rest_v + theta_v;
        for (int j = 0; j < m; ++j) direct += gi_inv(i, j) * sp.gi(v, basis_vector(m, j));
      }
      Relation contraction = scalar_relation(frame_trace);
      contraction.add("direct", Vec{direct});
      t.relation("contraction", contraction);
      rest = std::max(rest, std::abs(rest_trace));
      t.scalar("lhs_trace", std::abs(lhs_trace), 1.0);
      // m theta(X,Y) with xi normal; (m - |xi-top|^2) theta with xi tangent
      Relation trace = scalar_relation(frame_trace);
      trace.add("m_theta", Vec{m * theta});
      trace.correct("xi_tangent", Vec{-xi_sq * theta});
      t.relation("theta_trace", trace);
      if (std::abs(theta) > 1e-8) coef_dev = std::max(coef_dev, std::abs((frame_trace - rest_trace) / theta - m));
    }
  }
  t.set_metric("normal_curvature_max", rperp);
  t.set_metric("trace_rest", rest);
  t.set_metric("theta_coefficient_minus_m", coef_dev);
  if (!cl.xi_normal) {
    t.status(CheckStatus::not_applicable, "needs xi normal; trace metrics computed for the xi-tangent variant");
    return;
  }
  t.scalar("recurrence_theta0", rperp, 1.0);
}

// --- CR submanifolds ----------------------------------------------------------

// Throws ConfigError when the declared distributions are not a CR splitting.
inline void validate_cr(const CatalogImmersion& e, const SubmanifoldPoint& sp) {
  const double tol = 1e-9;
  const auto& id = e.immersion.id;
  for (const Vec& d : e.D)
    if (max_abs(sp.F(d)) > tol) throw ConfigError(id + ": D is not phi-invariant");
  for (const Vec& d : e.D_perp)
    if (tnorm(sp, sp.P(d)) > tol) throw ConfigError(id + ": D-perp is not anti-invariant");
  for (const Vec& a : e.D)
    for (const Vec& b : e.D_perp)
      if (std::abs(sp.gi(a, b)) > tol) throw ConfigError(id + ": D and D-perp are not orthogonal");
  if (max_abs(sp.xi_nor()) > tol) throw ConfigError(id + ": xi is not tangent");
  for (const Vec& b : e.D_perp)
    if (std::abs(sp.gi(sp.xi_tan(), b)) > tol) throw ConfigError(id + ": xi is not in D");
}

inline bool require_cr(CheckContext& c, Tally& t) {
  if (c.entry->klass != SubmanifoldClass::cr) {
    t.status(CheckStatus::not_applicable, "needs a CR submanifold with declared distributions");
    return false;
  }
  validate_cr(*c.entry, c.at(c.entry->immersion.domain.center()));
  return true;
}

// Pullback of a 2-form field to the source as first-order jets at `src`.
inline Matrix<Jet> pullback_two_form(const TensorField& form, const Immersion& imm, const Point& src) {
  const JetVec x2 = imm.map(lift_point(src, 2));
  const JetVec x1 = detail::truncate(x2, 1);
  const Matrix<Jet> F = form(x1);
  const int m = imm.source_dim, n = static_cast<int>(x2.size());
  std::vector<JetVec> e;
  for (int i = 0; i < m; ++i) e.push_back(detail::d(x2, i));
  Matrix<Jet> out(m, m, x1[0].constant_like(0.0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Jet s = x1[0].constant_like(0.0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += e[i][k] * F(k, l) * e[j][l];
      out(i, j) = s;
    }
  return out;
}

inline void thm5_1(CheckContext& c, Tally& t) {
  if (!require_cr(c, t)) return;
  const auto& e = *c.entry;
  const int m = e.immersion.source_dim, n = c.space->base.chart.dim;
  const TensorField Phi_t = fundamental_two_form_field(c.space->tilde);
  const TensorField Phi_b = fundamental_two_form_field(c.space->base);
  for (int s = 0; s < c.samples; ++s) {
    const Point src = c.source_sample();
    const SubmanifoldPoint sp = c.at(src);
    const ConformalPoint& cp = sp.ambient();
    const Point& q = sp.ambient_point();
    auto wedge = [&](const Vec& a, const Vec& b, const Vec& d) {
      return cp.omega(a) * cp.base().Phi(b, d) + cp.omega(b) * cp.base().Phi(d, a) + cp.omega(d) * cp.base().Phi(a, b);
    };
    // integrability: g'([Y,Z], phi X) for the spanning fields of D-perp
    for (std::size_t i = 0; i < e.D_perp_fields.size(); ++i)
      for (std::size_t j = i + 1; j < e.D_perp_fields.size(); ++j) {
        const Vec br = lie_bracket(e.D_perp_fields[i], e.D_perp_fields[j], src);
        for (const Vec& d : e.D) {
          const Vec pd = sp.P(d);
          t.scalar("bracket_projection", std::abs(sp.gi(br, pd)), tnorm(sp, br) * tnorm(sp, pd));
        }
      }
    const Matrix<Jet> pulled = pullback_two_form(Phi_b, e.immersion, src);
    for (int k = 0; k < c.probes; ++k) {
      // ambient: d Phi~ = 0 and d Phi~ = e^f (omega ^ Phi + d Phi)
      const Vec X = c.random(n), Y = c.random(n), Z = c.random(n);
      const double dt = exterior_derivative_2form(Phi_t, q, X, Y, Z);
      const double db = exterior_derivative_2form(Phi_b, q, X, Y, Z);
      const double ef = std::exp(cp.f());
      t.scalar("dPhi_tilde", std::abs(dt), std::max({1.0, std::abs(ef * db), std::abs(ef * wedge(X, Y, Z))}));
      Relation chain = scalar_relation(dt);
      chain.add("exp_f_omega_wedge_Phi", Vec{ef * wedge(X, Y, Z)});
      chain.add("exp_f_dPhi", Vec{ef * db});
      t.relation("dPhi_tilde_chain", chain);
      // source: X in D, Y, Z spanning D-perp
      const Vec x = c.random_in(e.D, m);
      const VectorField xf = constant_field(x);
      for (std::size_t i = 0; i < e.D_perp_fields.size(); ++i)
        for (std::size_t j = i + 1; j < e.D_perp_fields.size(); ++j) {
          const VectorField& yf = e.D_perp_fields[i];
          const VectorField& zf = e.D_perp_fields[j];
          const Vec y = eval_values(yf, src), z = eval_values(zf, src);
          const Vec br = lie_bracket(yf, zf, src);
          const double pal = exterior_derivative_2form(pulled, src, xf, yf, zf);
          const double w = wedge(sp.push(x), sp.push(y), sp.push(z));
          t.scalar("omega_wedge_Phi", std::abs(w), std::max(1.0, std::abs(pal)));
          Relation pb = scalar_relation(pal);
          pb.add("bracket", Vec{-cp.g(sp.push(br), cp.phi(sp.push(x)))});
          t.relation("pullback_dPhi", pb);
        }
      if (e.D_perp_fields.size() < 2) t.scalar("bracket_projection", 0.0, 1.0);
    }
  }
}

// g'-orthogonal projection onto span(basis).
inline Vec project(const SubmanifoldPoint& sp, const std::vector<Vec>& basis, const Vec& v) {
  const int k = static_cast<int>(basis.size());
  Matrix<double> G(k, k);
  Vec rhs(k);
  for (int i = 0; i < k; ++i) {
    rhs[i] = sp.gi(basis[i], v);
    for (int j = 0; j < k; ++j) G(i, j) = sp.gi(basis[i], basis[j]);
  }
  const Vec coef = mul(inverse(G), rhs);
  Vec out(v.size(), 0.0);
  for (int i = 0; i < k; ++i) out += coef[i] * basis[i];
  return out;
}

// The leaf of D-perp through `src` as an immersion into the ambient space.
inline Immersion leaf_immersion(const CatalogImmersion& e, const Point& src) {
  Immersion leaf;
  leaf.id = e.immersion.id + "/leaf";
  leaf.source_dim = static_cast<int>(e.D_perp.size());
  leaf.domain = Box::cube(leaf.source_dim, 0.05);
  leaf.map = [map = e.immersion.map, basis = e.D_perp, src](std::span<const Jet> s) {
    JetVec p;
    for (std::size_t i = 0; i < src.size(); ++i) {
      Jet c = s[0].constant_like(src[i]);
      for (std::size_t k = 0; k < basis.size(); ++k) c += basis[k][i] * s[k];
      p.push_back(c);
    }
    return map(p);
  };
  return leaf;
}

inline void thm5_3(CheckContext& c, Tally& t) {
  if (!require_cr(c, t)) return;
  const auto& e = *c.entry;
  const int m = e.immersion.source_dim;
  const Classification cl = classify_entry(c);
  const bool hypothesis = cl.lee_normal;
  long violations = 0;
  double mixed_max = 0.0, leaf_max = 0.0;
  for (int s = 0; s < c.samples; ++s) {
    const Point src = c.source_sample();
    const SubmanifoldPoint sp = c.at(src);
    const ConformalPoint& cp = sp.ambient();
    for (int k = 0; k < c.probes; ++k) {
      const Vec x = c.random_in(e.D, m), y = c.random_in(e.D_perp, m), z = c.random_in(e.D_perp, m);
      t.relation("eq5.2", cr_leaf_relation(sp, x, y, z));
    }
    // equivalence over X in D0 = D with the xi-component removed
    std::vector<Vec> d0;
    for (const Vec& d : e.D) {
      const Vec v = d - cp.eta(sp.push(d)) * sp.xi_tan();
      if (tnorm(sp, v) > 1e-9) d0.push_back(v);
    }
    double mixed = 0.0, leaf = 0.0;
    for (const Vec& x : d0)
      for (const Vec& y : e.D_perp) {
        mixed = std::max(mixed, tnorm(sp, sp.t(sp.h(x, y))));
        for (const Vec& z : e.D_perp) leaf = std::max(leaf, std::abs(sp.gi(sp.induced_connection(y, z), sp.P(x))));
      }
    mixed_max = std::max(mixed_max, mixed);
    leaf_max = std::max(leaf_max, leaf);
    if ((mixed <= c.tol) != (leaf <= c.tol)) ++violations;

    // nested oracle: the leaf's second fundamental form inside the submanifold
    const Immersion li = leaf_immersion(e, src);
    const NormalFrameChoice lf{choose_normal_candidates(*c.space, li), std::nullopt};
    const SubmanifoldPoint lp(*c.space, li, Point(li.source_dim, 0.0), lf);
    const int l = li.source_dim;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        const Vec hs = sp.tan_coords(lp.h_ambient(basis_vector(l, i), basis_vector(l, j)));
        const Vec nab = sp.induced_connection(e.D_perp[i], e.D_perp[j]);
        Relation r;
        r.lhs = hs;
        r.add("D_part_of_connection", nab - project(sp, e.D_perp, nab));
        t.relation("eq5.1_nested", r);
      }
  }
  t.set_metric("mixed_max", mixed_max);
  t.set_metric("leaf_max", leaf_max);
  t.set_metric("equivalence_violations", static_cast<double>(violations));
  if (!hypothesis) {
    t.status(CheckStatus::hypothesis_failure, "Lee vector not normal; equivalence not asserted");
    return;
  }
  t.scalar("equivalence", static_cast<double>(violations), 1.0);
}

}  // namespace checks

inline const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg = {
      {"eq2.1", false, "almost contact metric identities (tilde and base)", checks::eq2_1},
      {"eq2.2", false, "Sasakian, normality, contact form and phi-sectional -3 on the tilde structure", checks::eq2_2},
      {"eq2.6", false, "conformal relations between tilde and base structures, Lee data", checks::eq2_6},
      {"eq2.7", false, "connection transformation", checks::eq2_7},
      {"eq2.8", false, "curvature transformation", checks::eq2_8},
      {"eq2.9", false, "covariant derivative of phi", checks::eq2_9},
      {"eq2.10", false, "covariant derivative of xi", checks::eq2_10},
      {"eq2.11", true, "structure equation for P", checks::eq2_11},
      {"eq2.12", true, "structure equation for F", checks::eq2_12},
      {"eq2.13", true, "structure equation for t", checks::eq2_13},
      {"eq2.14", true, "structure equation for f_nor", checks::eq2_14},
      {"eq2.15", true, "Gauss equation", checks::eq2_15},
      {"eq2.16", true, "Codazzi equation", checks::eq2_16},
      {"eq2.17", true, "Ricci equation with rotated-frame covariance", checks::eq2_17},
      {"eq3.2", true, "second fundamental form of invariant submanifolds", checks::eq3_2},
      {"thm3.1", true, "mean curvature of invariant submanifolds", checks::thm3_1},
      {"eq4.1", true, "shape operator of anti-invariant submanifolds", checks::eq4_1},
      {"eq4.2", true, "shape operator commutator, term-group report", checks::eq4_2},
      {"eq4.4", false, "phi and the tilde curvature", checks::eq4_4},
      {"prop4.2", true, "flat normal connection characterisation", checks::prop4_2},
      {"thm4.3", true, "recurrent normal curvature", checks::thm4_3},
      {"thm5.1", true, "integrability of D-perp", checks::thm5_1},
      {"thm5.3", true, "mixed totally geodesic CR submanifolds", checks::thm5_3},
  };
  return reg;
}

inline const CheckInfo& find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return c;
  throw ConfigError("unknown check id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Suite runner

struct SpaceSpec {
  std::string model;   // e.g. "sasakian:n=2"
  std::string factor;  // e.g. "linear_z:a=0.3"
  bool operator==(const SpaceSpec&) const = default;
};

struct RunConfig {
  std::vector<SpaceSpec> spaces;
  std::vector<std::string> immersions;
  std::vector<std::string> checks{"all"};
  int samples = 16;
  int probes = 4;
  std::uint64_t seed = 42;
  double tol = 1e-7;
  std::string report_path;

  bool operator==(const RunConfig&) const = default;
};

// Sasakian model parameter n an immersion lives in.
inline int immersion_ambient_n(const std::string& id) { return immersion_catalog(id).ambient_n; }

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
  if (cfg.probes < 1) throw ConfigError("probes must be >= 1");
  if (!(cfg.tol > 0.0)) throw ConfigError("tolerance must be > 0");
  for (const auto& id : cfg.checks)
    if (id != "all") find_check(id);
}

inline std::vector<const CheckInfo*> selected_checks(const RunConfig& cfg) {
  std::vector<const CheckInfo*> out;
  for (const auto& id : cfg.checks) {
    if (id == "all") {
      for (const auto& c : check_registry())
        if (std::find(out.begin(), out.end(), &c) == out.end()) out.push_back(&c);
    } else {
      const CheckInfo* c = &find_check(id);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return out;
}

inline int thread_count() {
  int n = 0;
  if (const char* env = std::getenv("VERIFY_THREADS")) n = std::atoi(env);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

// Run one check.  Geometry failures become failed results; configuration
// errors propagate.
inline CheckResult run_check(const CheckInfo& info, const ConformalSasakianSpace& space, const SpaceSpec& spec,
                             const CatalogImmersion* entry, const std::string& immersion_id, const RunConfig& cfg) {
  CheckResult res;
  res.id = info.id;
  res.space = spec.model;
  res.factor = spec.factor;
  res.immersion = immersion_id;
  res.samples = cfg.samples;
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx;
  ctx.space = &space;
  ctx.entry = entry;
  ctx.rng.seed(fnv1a(info.id + "|" + spec.model + "|" + spec.factor + "|" + immersion_id) ^ cfg.seed);
  ctx.samples = cfg.samples;
  ctx.probes = cfg.probes;
  ctx.tol = cfg.tol;
  Tally tally(cfg.tol);
  try {
    if (entry) ctx.frame = NormalFrameChoice{choose_normal_candidates(space, entry->immersion), std::nullopt};
    info.fn(ctx, tally);
    tally.finish(res);
  } catch (const GeometryError& e) {
    tally.finish(res);
    res.pass = false;
    res.note = std::string("geometry error: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

inline std::vector<CheckResult> run_suite(const RunConfig& cfg) {
  validate(cfg);
  const auto chosen = selected_checks(cfg);
  std::vector<ConformalSasakianSpace> spaces;
  for (const auto& s : cfg.spaces) spaces.push_back(conformal_space(s.model, s.factor));
  std::vector<CatalogImmersion> entries;
  for (const auto& id : cfg.immersions) {
    entries.push_back(immersion_catalog(id));
    bool placed = false;
    for (const auto& s : cfg.spaces) placed = placed || model_n(s.model) == entries.back().ambient_n;
    if (!placed)
      throw ConfigError("immersion '" + id + "' needs sasakian:n=" + std::to_string(entries.back().ambient_n));
  }

  struct Job {
    const CheckInfo* info;
    std::size_t space;
    int entry;  // -1 for ambient checks
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < cfg.spaces.size(); ++s) {
    for (const CheckInfo* c : chosen)
      if (!c->needs_immersion) jobs.push_back({c, s, -1});
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].ambient_n != model_n(cfg.spaces[s].model)) continue;
      for (const CheckInfo* c : chosen)
        if (c->needs_immersion) jobs.push_back({c, s, static_cast<int>(i)});
    }
  }

  std::vector<CheckResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const Job& job = jobs[j];
      try {
        const CatalogImmersion* entry = job.entry >= 0 ? &entries[job.entry] : nullptr;
        results[j] = run_check(*job.info, spaces[job.space], cfg.spaces[job.space], entry,
                               entry ? cfg.immersions[job.entry] : std::string(), cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int nthreads = std::min<int>(thread_count(), static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Exit status of a finished suite: 0 when every executed check passes.
inline int suite_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.executed() && !r.pass) return 1;
  return 0;
}

// The default suite: Sasakian models n = 1, 2, 3 under three factor
// families, with every catalog immersion placed in its model.
inline RunConfig default_suite() {
  RunConfig cfg;
  for (int n = 1; n <= 3; ++n)
    for (const char* f : {"const:c=0.2", "linear_z:a=0.3", "quad:c=0.1"})
      cfg.spaces.push_back({"sasakian:n=" + std::to_string(n), f});
  cfg.immersions = {"invariant_1_in_1", "anti_xaxis_r3", "anti_y0_plane_r3", "invariant_1_in_2",
                    "anti_surface_r5",  "cr_r5",         "invariant_2_in_3", "cr_r7"};
  return cfg;
}

}  // namespace consas
