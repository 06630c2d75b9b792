#pragma once

// Conformal Sasakian spaces.
//
// A space is built tilde-first: (phi, xi~, eta~, g~) is a Sasakian structure
// and the base structure is obtained from the conformal exponent f by
//   g = exp(-f) g~,  eta = exp(-f/2) eta~,  xi = exp(f/2) xi~,  phi = phi.
// The Lee form is always computed as df from jets.

#include <cmath>
#include <string>
#include <utility>

#include "consas/contact.hpp"
#include "consas/relation.hpp"

namespace consas {

struct ConformalSasakianSpace {
  std::string id;
  AlmostContactStructure tilde;
  ScalarField factor;  // conformal exponent f (any smooth real function)
  AlmostContactStructure base;
};

inline ConformalSasakianSpace make_conformal_space(std::string id, AlmostContactStructure tilde, ScalarField f) {
  AlmostContactStructure base;
  base.chart.dim = tilde.chart.dim;
  base.chart.domain = tilde.chart.domain;
  base.chart.metric = [gt = tilde.chart.metric, f](std::span<const Jet> x) {
    return (1.0 * gt(x)).map([s = exp(-f(x))](const Jet& e) { return e * s; });
  };
  base.eta = [et = tilde.eta, f](std::span<const Jet> x) {
    JetVec e = et(x);
    const Jet s = exp(-0.5 * f(x));
    for (Jet& c : e) c = c * s;
    return e;
  };
  base.xi = [xt = tilde.xi, f](std::span<const Jet> x) {
    JetVec v = xt(x);
    const Jet s = exp(0.5 * f(x));
    for (Jet& c : v) c = c * s;
    return v;
  };
  base.phi = tilde.phi;
  return ConformalSasakianSpace{std::move(id), std::move(tilde), std::move(f), std::move(base)};
}

// Base and tilde structures plus Lee data at one point.
class ConformalPoint {
 public:
  ConformalPoint(const ConformalSasakianSpace& space, const Point& p)
      : base_(space.base, p), tilde_(space.tilde, p) {
    const int n = base_.dim();
    const JetVec x2 = lift_point(p, 2);
    const Jet f = space.factor(x2);
    f_ = f.value();
    omega_.assign(n, 0.0);
    hess_ = Matrix<double>(n, n);
    for (int i = 0; i < n; ++i) {
      omega_[i] = f.d(i);
      for (int j = 0; j < n; ++j) hess_(i, j) = f.d(i, j);
    }
    // omega# as order-1 jets: g^{-1}(x) df(x).
    const JetVec x1 = lift_point(p, 1);
    const Matrix<Jet> g_inv = inverse(space.base.chart.metric(x1));
    JetVec df;
    for (int i = 0; i < n; ++i) df.push_back(f.derivative(i));
    omega_sharp_jets_ = g_inv.apply(df);
    omega_sharp_ = values(omega_sharp_jets_);
  }

  const StructureAtPoint& base() const { return base_; }
  const StructureAtPoint& tilde() const { return tilde_; }
  const LocalGeometry& geo() const { return base_.geometry(); }
  int dim() const { return base_.dim(); }

  double f() const { return f_; }
  double omega(const Vec& x) const { return dot(omega_, x); }
  const Vec& omega_form() const { return omega_; }
  const Vec& omega_sharp() const { return omega_sharp_; }
  // omega# as order-1 jets in the chart variables (for composition).
  const JetVec& omega_sharp_jets() const { return omega_sharp_jets_; }
  double lee_norm_sq() const { return geo().inner(omega_sharp_, omega_sharp_); }

  // nabla_X omega#
  Vec nabla_omega_sharp(const Vec& x) const {
    Vec out = geo().connection(x, omega_sharp_);
    for (int k = 0; k < dim(); ++k)
      for (int l = 0; l < dim(); ++l) out[k] += x[l] * omega_sharp_jets_[k].d(l);
    return out;
  }

  // (nabla_X omega)(Y) = X^i Y^j (d_i d_j f - Gamma^k_ij d_k f)
  double nabla_omega(const Vec& x, const Vec& y) const {
    return bilinear(hess_, x, y) - omega(geo().connection(x, y));
  }

  // B(X,Y) = (nabla_X omega)(Y) - 1/2 omega(X) omega(Y)
  double B(const Vec& x, const Vec& y) const { return nabla_omega(x, y) - 0.5 * omega(x) * omega(y); }

  // B(X, .)# raised with g.
  Vec B_sharp(const Vec& x) const {
    Vec form(dim());
    for (int j = 0; j < dim(); ++j) form[j] = B(x, basis_vector(dim(), j));
    return geo().raise(form);
  }

  double g(const Vec& a, const Vec& b) const { return geo().inner(a, b); }
  double eta(const Vec& v) const { return base_.eta(v); }
  Vec phi(const Vec& v) const { return base_.phi(v); }
  const Vec& xi() const { return base_.xi(); }
  double exp_half_f() const { return std::exp(0.5 * f_); }

 private:
  StructureAtPoint base_;
  StructureAtPoint tilde_;
  double f_ = 0.0;
  Vec omega_;
  Matrix<double> hess_;
  JetVec omega_sharp_jets_;
  Vec omega_sharp_;
};

// nabla~_X Y = nabla_X Y + 1/2 {omega(X) Y + omega(Y) X - g(X,Y) omega#}
// for coordinate-constant X, Y (both connections reduce to Gamma(X,Y)).
inline Relation connection_relation(const ConformalPoint& cp, const Vec& x, const Vec& y) {
  Relation r;
  r.lhs = cp.tilde().geometry().connection(x, y);
  r.add("nabla", cp.geo().connection(x, y));
  r.add("lee", 0.5 * (cp.omega(x) * y + cp.omega(y) * x - cp.g(x, y) * cp.omega_sharp()));
  return r;
}

inline Vec connection_difference_defect(const ConformalPoint& cp, const Vec& x, const Vec& y) {
  return connection_relation(cp, x, y).printed_defect();
}

// exp(-f) R~(X,Y,Z,W) = R(X,Y,Z,W) + 1/2 {B-terms} + 1/4 |omega#|^2 {g-terms}
inline Relation curvature_relation(const ConformalPoint& cp, const Vec& x, const Vec& y, const Vec& z,
                                   const Vec& w) {
  const auto& tg = cp.tilde().geometry();
  Relation r = scalar_relation(std::exp(-cp.f()) * tg.curvature_4(x, y, z, w));
  r.add("R", Vec{cp.geo().curvature_4(x, y, z, w)});
  r.add("B", Vec{0.5 * (cp.B(x, z) * cp.g(y, w) - cp.B(y, z) * cp.g(x, w) + cp.B(y, w) * cp.g(x, z) -
                        cp.B(x, w) * cp.g(y, z))});
  r.add("lee_norm", Vec{0.25 * cp.lee_norm_sq() * (cp.g(x, z) * cp.g(y, w) - cp.g(y, z) * cp.g(x, w))});
  return r;
}

inline double curvature_relation_defect(const ConformalPoint& cp, const Vec& x, const Vec& y, const Vec& z,
                                        const Vec& w) {
  return curvature_relation(cp, x, y, z, w).printed_defect()[0];
}

// (nabla_X phi)Y = e^{f/2}{g(X,Y) xi - eta(Y) X}
//                  - 1/2 {omega(phi Y) X - omega(Y) phi X + g(X,Y) phi omega# - g(X, phi Y) omega#}
inline Relation dphi_relation(const ConformalPoint& cp, const Vec& x, const Vec& y) {
  Relation r;
  r.lhs = cp.base().nabla_phi(x, y);
  r.add("sasaki", cp.exp_half_f() * (cp.g(x, y) * cp.xi() - cp.eta(y) * x));
  r.add("lee", -0.5 * (cp.omega(cp.phi(y)) * x - cp.omega(y) * cp.phi(x) + cp.g(x, y) * cp.phi(cp.omega_sharp()) -
                       cp.g(x, cp.phi(y)) * cp.omega_sharp()));
  return r;
}

inline Vec dphi_relation_defect(const ConformalPoint& cp, const Vec& x, const Vec& y) {
  return dphi_relation(cp, x, y).printed_defect();
}

// nabla_X xi as printed: e^{-f/2} phi X + 1/2 {eta(X) omega# - omega(xi) X}.
// The phi-term closes as -e^{f/2} phi X (nabla~ xi~ = -phi for a Sasakian
// structure and xi = e^{f/2} xi~); that difference is the correction group.
inline Relation dxi_relation(const ConformalPoint& cp, const Vec& x) {
  Relation r;
  r.lhs = cp.base().nabla_xi(x);
  const Vec px = cp.phi(x);
  r.add("phi", (1.0 / cp.exp_half_f()) * px);
  r.add("lee", 0.5 * (cp.eta(x) * cp.omega_sharp() - cp.omega(cp.xi()) * x));
  r.correct("phi:sign_and_exponent", -(cp.exp_half_f() + 1.0 / cp.exp_half_f()) * px);
  return r;
}

inline Vec dxi_relation_defect(const ConformalPoint& cp, const Vec& x) { return dxi_relation(cp, x).printed_defect(); }

}  // namespace consas
