#pragma once

// Almost contact metric structures (phi, xi, eta, g) on a chart and their
// point-wise diagnostics.  Probe vectors are extended as coordinate-constant
// fields, so brackets of probes vanish.

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "consas/linalg.hpp"
#include "consas/manifold.hpp"

namespace consas {

struct AlmostContactStructure {
  MetricChart chart;
  TensorField phi;  // (1,1)-tensor, row index upper
  VectorField xi;
  VectorField eta;  // covector components
};

// Convention for the normality condition.  With the Palais sum
// D(X,Y) = X eta(Y) - Y eta(X) - eta([X,Y]) and d eta = D / 2, a normal
// structure satisfies [phi,phi] + kNormalitySign * 2 d eta (x) xi = 0.
inline constexpr double kNormalitySign = 1.0;
inline constexpr double kDetaNormalisation = 0.5;

// Structure tensors and their first derivatives at one point.
class StructureAtPoint {
 public:
  StructureAtPoint(const AlmostContactStructure& s, const Point& p) : geo_(s.chart, p) {
    const int n = s.chart.dim;
    const JetVec x = lift_point(p, 1);
    const Matrix<Jet> phi = s.phi(x);
    const JetVec xi = s.xi(x), eta = s.eta(x);
    phi_ = values(phi);
    xi_ = values(xi);
    eta_ = values(eta);
    dphi_.assign(n, Matrix<double>(n, n));
    dxi_.assign(n, Vec(n));
    deta_.assign(n, Vec(n));
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dphi_[l](i, j) = phi(i, j).d(l);
        dxi_[l][i] = xi[i].d(l);
        deta_[l][i] = eta[i].d(l);
      }
    }
  }

  const LocalGeometry& geometry() const { return geo_; }
  int dim() const { return geo_.dim(); }
  const Matrix<double>& phi_matrix() const { return phi_; }
  const Vec& xi() const { return xi_; }
  const Vec& eta_form() const { return eta_; }

  Vec phi(const Vec& v) const { return mul(phi_, v); }
  double eta(const Vec& v) const { return dot(eta_, v); }
  double g(const Vec& a, const Vec& b) const { return geo_.inner(a, b); }

  // X(phi) applied to Y: X^l (d_l phi) Y
  Vec dphi(const Vec& x, const Vec& y) const {
    Vec out(dim(), 0.0);
    for (int l = 0; l < dim(); ++l)
      if (x[l] != 0.0) out += x[l] * mul(dphi_[l], y);
    return out;
  }

  // (nabla_X phi) Y = X(phi)Y + Gamma(X, phi Y) - phi Gamma(X, Y)
  Vec nabla_phi(const Vec& x, const Vec& y) const {
    return dphi(x, y) + geo_.connection(x, phi(y)) - phi(geo_.connection(x, y));
  }

  // nabla_X xi
  Vec nabla_xi(const Vec& x) const {
    Vec out = geo_.connection(x, xi_);
    for (int l = 0; l < dim(); ++l)
      if (x[l] != 0.0) out += x[l] * dxi_[l];
    return out;
  }

  // X(eta(Y)) for coordinate-constant Y.
  double d_eta_along(const Vec& x, const Vec& y) const {
    double s = 0.0;
    for (int l = 0; l < dim(); ++l) s += x[l] * dot(deta_[l], y);
    return s;
  }

  // Fundamental 2-form Phi(X, Y) = g(X, phi Y).
  double Phi(const Vec& x, const Vec& y) const { return g(x, phi(y)); }

 private:
  LocalGeometry geo_;
  Matrix<double> phi_;
  Vec xi_, eta_;
  std::vector<Matrix<double>> dphi_;
  std::vector<Vec> dxi_, deta_;
};

struct AlmostContactResiduals {
  double phi_square = 0.0;     // phi^2 + Id - eta (x) xi
  double eta_xi = 0.0;         // eta(xi) - 1
  double compatibility = 0.0;  // g(phi X, phi Y) - g(X,Y) + eta(X) eta(Y)
  double eta_phi = 0.0;        // eta o phi and phi xi
  double max() const { return std::max({phi_square, eta_xi, compatibility, eta_phi}); }
};

inline Vec basis_vector(int n, int i) {
  Vec e(n, 0.0);
  e[i] = 1.0;
  return e;
}

inline AlmostContactResiduals verify_almost_contact(const StructureAtPoint& s) {
  const int n = s.dim();
  AlmostContactResiduals r;
  r.eta_xi = std::abs(s.eta(s.xi()) - 1.0);
  r.eta_phi = max_abs(s.phi(s.xi()));
  for (int i = 0; i < n; ++i) {
    const Vec ei = basis_vector(n, i);
    Vec d = s.phi(s.phi(ei)) + ei - s.eta(ei) * s.xi();
    r.phi_square = std::max(r.phi_square, max_abs(d));
    r.eta_phi = std::max(r.eta_phi, std::abs(s.eta(s.phi(ei))));
    for (int j = 0; j < n; ++j) {
      const Vec ej = basis_vector(n, j);
      const double c = s.g(s.phi(ei), s.phi(ej)) - s.g(ei, ej) + s.eta(ei) * s.eta(ej);
      r.compatibility = std::max(r.compatibility, std::abs(c));
    }
  }
  return r;
}

inline AlmostContactResiduals verify_almost_contact(const AlmostContactStructure& acs, const Point& p) {
  return verify_almost_contact(StructureAtPoint(acs, p));
}

inline double fundamental_two_form(const AlmostContactStructure& acs, const Point& p, const Vec& x, const Vec& y) {
  return StructureAtPoint(acs, p).Phi(x, y);
}

// The 2-form field Phi_ij = g(e_i, phi e_j).
inline TensorField fundamental_two_form_field(const AlmostContactStructure& acs) {
  return [metric = acs.chart.metric, phi = acs.phi](std::span<const Jet> x) { return metric(x) * phi(x); };
}

// (nabla_X phi)Y - g(X,Y) xi + eta(Y) X
inline Vec sasakian_defect(const StructureAtPoint& s, const Vec& x, const Vec& y) {
  return s.nabla_phi(x, y) - s.g(x, y) * s.xi() + s.eta(y) * x;
}

inline Vec sasakian_defect(const AlmostContactStructure& acs, const Point& p, const Vec& x, const Vec& y) {
  return sasakian_defect(StructureAtPoint(acs, p), x, y);
}

// Nijenhuis torsion [phi,phi](X,Y) for coordinate-constant X, Y, using the
// reduced formula [phiX,phiY] - phi[phiX,Y] - phi[X,phiY].
inline Vec nijenhuis_torsion(const StructureAtPoint& s, const Vec& x, const Vec& y) {
  const Vec px = s.phi(x), py = s.phi(y);
  const Vec bracket_pxpy = s.dphi(px, y) - s.dphi(py, x);
  const Vec bracket_px_y = -1.0 * s.dphi(y, x);
  const Vec bracket_x_py = s.dphi(x, y);
  return bracket_pxpy - s.phi(bracket_px_y) - s.phi(bracket_x_py);
}

// Same quantity from the general Lie-bracket definition on jet fields.
inline Vec nijenhuis_torsion_fields(const AlmostContactStructure& acs, const Point& p, const Vec& x, const Vec& y) {
  const VectorField xf = constant_field(x), yf = constant_field(y);
  const TensorField phi = acs.phi;
  auto phi_of = [phi](VectorField v) -> VectorField {
    return [phi, v](std::span<const Jet> c) {
      const Matrix<Jet> m = phi(c);
      const JetVec vv = v(c);
      return m.apply(vv);
    };
  };
  const Matrix<double> phi_p = values(phi(lift_point(p, 0)));
  const Vec xy = lie_bracket(xf, yf, p);
  const Vec a = mul(phi_p, mul(phi_p, xy));
  const Vec b = lie_bracket(phi_of(xf), phi_of(yf), p);
  const Vec c = mul(phi_p, lie_bracket(phi_of(xf), yf, p));
  const Vec d = mul(phi_p, lie_bracket(xf, phi_of(yf), p));
  return a + b - c - d;
}

// [phi,phi](X,Y) + 2 d eta(X,Y) xi
inline Vec nijenhuis_normality_defect(const StructureAtPoint& s, const Vec& x, const Vec& y) {
  const double palais = s.d_eta_along(x, y) - s.d_eta_along(y, x);
  return nijenhuis_torsion(s, x, y) + (kNormalitySign * 2.0 * kDetaNormalisation * palais) * s.xi();
}

inline Vec nijenhuis_normality_defect(const AlmostContactStructure& acs, const Point& p, const Vec& x,
                                      const Vec& y) {
  return nijenhuis_normality_defect(StructureAtPoint(acs, p), x, y);
}

}  // namespace consas
