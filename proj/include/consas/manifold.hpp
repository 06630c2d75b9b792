#pragma once

// Single-chart Riemannian geometry driven by jets.
//
// A MetricChart is a coordinate domain plus a metric field that can be
// evaluated on jets.  Everything downstream (Christoffel symbols, curvature,
// gradients, exterior derivatives) is obtained by lifting the evaluation
// point to jets and reading off exact derivatives.
//
// Conventions:
//   Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
//   R(X,Y)Z    = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   R(X,Y,Z,W) = g(R(X,Y)Z, W)
//   d of a k-form is returned as the unnormalised Palais sum, e.g.
//   d1(eta)(X,Y) = X eta(Y) - Y eta(X) - eta([X,Y]).

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "consas/jet.hpp"
#include "consas/linalg.hpp"

namespace consas {

using Point = std::vector<double>;
using JetVec = std::vector<Jet>;

using ScalarField = std::function<Jet(std::span<const Jet>)>;
// Vector fields and 1-forms alike: one component per coordinate.
using VectorField = std::function<JetVec(std::span<const Jet>)>;
// (1,1)-tensors (row = upper index), metrics and 2-forms.
using TensorField = std::function<Matrix<Jet>(std::span<const Jet>)>;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  // Explicit mapping keeps samples identical across standard libraries.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box cube(int dim, double half_width) {
    return Box{std::vector<double>(dim, -half_width), std::vector<double>(dim, half_width)};
  }
  int dim() const { return static_cast<int>(lo.size()); }
  Point center() const {
    Point c(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
    return c;
  }
  bool contains(const Point& p) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }
  // Uniform sample from the box shrunk by 10% of its width on every side.
  Point sample(Rng& rng) const {
    Point p(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const double w = hi[i] - lo[i];
      p[i] = uniform(rng, lo[i] + 0.1 * w, hi[i] - 0.1 * w);
    }
    return p;
  }
};

struct MetricChart {
  int dim = 0;
  TensorField metric;
  Box domain;
};

inline JetVec eval(const VectorField& v, const Point& p, int order) {
  const JetVec x = lift_point(p, order);
  return v(x);
}

inline Vec eval_values(const VectorField& v, const Point& p) { return values(eval(v, p, 0)); }

inline Matrix<double> metric_at(const MetricChart& chart, const Point& p) {
  return values(chart.metric(lift_point(p, 0)));
}

// Smallest eigenvalue and symmetry defect of the metric at p.
struct MetricValidity {
  double min_eigenvalue = 0.0;
  double asymmetry = 0.0;
  bool ok() const { return min_eigenvalue > 0.0 && asymmetry <= 1e-12; }
};

inline MetricValidity validate_metric(const MetricChart& chart, const Point& p) {
  const Matrix<double> g = metric_at(chart, p);
  MetricValidity v;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) v.asymmetry = std::max(v.asymmetry, std::abs(g(i, j) - g(j, i)));
  v.min_eigenvalue = min_eigenvalue(g);
  return v;
}

// Christoffel symbols of a jet-valued metric: given the metric as jets of
// order k >= 1 in the chart variables, returns Gamma^c_ab as jets of order
// k - 1, indexed [(c*n + a)*n + b].
inline JetVec christoffel_jets(const Matrix<Jet>& g) {
  const int n = g.rows();
  const int order = g(0, 0).order() - 1;
  Matrix<Jet> g_low = g.map([&](const Jet& x) { return x.truncated(order); });
  Matrix<Jet> g_inv;
  try {
    g_inv = inverse(g_low);
  } catch (const SingularMatrixError& e) {
    throw GeometryError(std::string("singular metric: ") + e.what());
  }
  std::vector<Matrix<Jet>> dg;
  dg.reserve(n);
  for (int k = 0; k < n; ++k) dg.push_back(g.map([&](const Jet& x) { return x.derivative(k); }));
  // First-kind symbols Gamma_{l,ab}.
  JetVec first(static_cast<std::size_t>(n) * n * n);
  for (int l = 0; l < n; ++l)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Jet s = dg[a](b, l) + dg[b](a, l) - dg[l](a, b);
        s *= 0.5;
        first[(l * n + a) * n + b] = s;
        first[(l * n + b) * n + a] = s;
      }
  JetVec gamma(static_cast<std::size_t>(n) * n * n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Jet s;
        for (int l = 0; l < n; ++l) s += g_inv(c, l) * first[(l * n + a) * n + b];
        gamma[(c * n + a) * n + b] = s;
        gamma[(c * n + b) * n + a] = s;
      }
  return gamma;
}

// R^l_{ijk} (R(d_i, d_j) d_k = R^l_{ijk} d_l) from order >= 1 Christoffel
// jets, indexed [((l*n + i)*n + j)*n + k].
inline std::vector<double> riemann_from_christoffel(const JetVec& gamma, int n) {
  auto G = [&](int k, int i, int j) { return gamma[(k * n + i) * n + j].value(); };
  auto dG = [&](int l, int k, int i, int j) { return gamma[(k * n + i) * n + j].d(l); };
  std::vector<double> r(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = dG(i, l, j, k) - dG(j, l, i, k);
          for (int m = 0; m < n; ++m) s += G(l, i, m) * G(m, j, k) - G(l, j, m) * G(m, i, k);
          r[((l * n + i) * n + j) * n + k] = s;
        }
  return r;
}

// Metric, connection and curvature of a chart at one point.
class LocalGeometry {
 public:
  LocalGeometry(const MetricChart& chart, const Point& p) : n_(chart.dim), point_(p) {
    if (static_cast<int>(p.size()) != n_) throw GeometryError("point dimension does not match chart");
    const JetVec x = lift_point(p, 2);
    const Matrix<Jet> g = chart.metric(x);
    g_ = values(g);
    gamma_jets_ = christoffel_jets(g);
    try {
      g_inv_ = inverse(g_);
    } catch (const SingularMatrixError& e) {
      throw GeometryError(std::string("singular metric: ") + e.what());
    }
    const std::size_t n3 = static_cast<std::size_t>(n_) * n_ * n_;
    gamma_.resize(n3);
    dgamma_.resize(n3 * n_);
    for (std::size_t idx = 0; idx < n3; ++idx) {
      gamma_[idx] = gamma_jets_[idx].value();
      for (int l = 0; l < n_; ++l) dgamma_[l * n3 + idx] = gamma_jets_[idx].d(l);
    }
    first_kind_.resize(n3);
    for (int l = 0; l < n_; ++l)
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          first_kind_[(l * n_ + a) * n_ + b] =
              0.5 * (g(b, l).d(a) + g(a, l).d(b) - g(a, b).d(l));
    riemann_ = riemann_from_christoffel(gamma_jets_, n_);
  }

  int dim() const { return n_; }
  const Point& point() const { return point_; }
  const Matrix<double>& g() const { return g_; }
  const Matrix<double>& g_inv() const { return g_inv_; }

  double Gamma(int k, int i, int j) const { return gamma_[(k * n_ + i) * n_ + j]; }
  // d_l Gamma^k_ij
  double dGamma(int l, int k, int i, int j) const {
    return dgamma_[static_cast<std::size_t>(l) * n_ * n_ * n_ + (k * n_ + i) * n_ + j];
  }
  // Gamma_{l,ij} = g_lk Gamma^k_ij, assembled without the inverse metric.
  double GammaFirst(int l, int i, int j) const { return first_kind_[(l * n_ + i) * n_ + j]; }
  // Christoffel symbols as order-1 jets in the chart variables.
  const JetVec& gamma_jets() const { return gamma_jets_; }

  double inner(const Vec& x, const Vec& y) const { return bilinear(g_, x, y); }
  Vec lower(const Vec& x) const { return mul(g_, x); }
  Vec raise(const Vec& form) const { return mul(g_inv_, form); }

  // Gamma(X, Y)^k = Gamma^k_ij X^i Y^j
  Vec connection(const Vec& x, const Vec& y) const {
    Vec out(n_, 0.0);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < n_; ++j) out[k] += Gamma(k, i, j) * x[i] * y[j];
      }
    return out;
  }

  // R(X,Y)Z for tangent vectors at the point.
  Vec riemann(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out(n_, 0.0);
    for (int l = 0; l < n_; ++l)
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          const double xy = x[i] * y[j];
          if (xy == 0.0) continue;
          for (int k = 0; k < n_; ++k) out[l] += riemann_[((l * n_ + i) * n_ + j) * n_ + k] * xy * z[k];
        }
    return out;
  }

  double curvature_4(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const {
    return inner(riemann(x, y, z), w);
  }

 private:
  int n_;
  Point point_;
  Matrix<double> g_, g_inv_;
  JetVec gamma_jets_;
  std::vector<double> gamma_, dgamma_, first_kind_, riemann_;
};

// Gamma^k_ij at p, upper index first: [(k*n + i)*n + j].
inline std::vector<double> christoffel(const MetricChart& chart, const Point& p) {
  const LocalGeometry geo(chart, p);
  std::vector<double> out(static_cast<std::size_t>(chart.dim) * chart.dim * chart.dim);
  for (int k = 0; k < chart.dim; ++k)
    for (int i = 0; i < chart.dim; ++i)
      for (int j = 0; j < chart.dim; ++j) out[(k * chart.dim + i) * chart.dim + j] = geo.Gamma(k, i, j);
  return out;
}

// Directional derivative X(Y) of a vector field's components at p.
inline Vec directional_derivative(const VectorField& field, const Point& p, const Vec& x) {
  const JetVec y = eval(field, p, 1);
  Vec out(y.size(), 0.0);
  for (std::size_t k = 0; k < y.size(); ++k)
    for (std::size_t i = 0; i < x.size(); ++i) out[k] += x[i] * y[k].d(static_cast<int>(i));
  return out;
}

// (nabla_X Y)^k = X^i d_i Y^k + Gamma^k_ij X^i Y^j
inline Vec covariant_derivative(const LocalGeometry& geo, const VectorField& y_field, const Vec& x) {
  const Vec y = eval_values(y_field, geo.point());
  return directional_derivative(y_field, geo.point(), x) + geo.connection(x, y);
}

inline Vec covariant_derivative(const MetricChart& chart, const VectorField& y_field, const Vec& x,
                                const Point& p) {
  return covariant_derivative(LocalGeometry(chart, p), y_field, x);
}

inline Vec riemann(const MetricChart& chart, const Point& p, const Vec& x, const Vec& y, const Vec& z) {
  return LocalGeometry(chart, p).riemann(x, y, z);
}

inline double curvature_4(const MetricChart& chart, const Point& p, const Vec& x, const Vec& y, const Vec& z,
                          const Vec& w) {
  return LocalGeometry(chart, p).curvature_4(x, y, z, w);
}

// Exterior derivative of a scalar field at p (covector).
inline Vec differential(const ScalarField& s, const Point& p) {
  const Jet v = s(lift_point(p, 1));
  Vec out(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = v.d(static_cast<int>(i));
  return out;
}

// grad s = g^{-1} ds
inline Vec gradient(const LocalGeometry& geo, const ScalarField& s) {
  return geo.raise(differential(s, geo.point()));
}

inline Vec gradient(const MetricChart& chart, const ScalarField& s, const Point& p) {
  return gradient(LocalGeometry(chart, p), s);
}

// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k
inline Vec lie_bracket(const VectorField& x_field, const VectorField& y_field, const Point& p) {
  const Vec x = eval_values(x_field, p);
  const Vec y = eval_values(y_field, p);
  return directional_derivative(y_field, p, x) - directional_derivative(x_field, p, y);
}

inline VectorField constant_field(Vec v) {
  return [v = std::move(v)](std::span<const Jet> x) {
    JetVec out;
    out.reserve(v.size());
    for (double c : v) out.push_back(x.empty() ? Jet(c) : x[0].constant_like(c));
    return out;
  };
}

inline Jet pair(std::span<const Jet> form, std::span<const Jet> vec) {
  Jet s;
  for (std::size_t i = 0; i < form.size(); ++i) s += form[i] * vec[i];
  return s;
}

// Palais sum X eta(Y) - Y eta(X) - eta([X,Y]) for a 1-form field.
inline double exterior_derivative_1form(const VectorField& eta, const Point& p, const VectorField& x_field,
                                        const VectorField& y_field) {
  const JetVec x = lift_point(p, 1);
  const Jet eta_y = pair(eta(x), y_field(x));
  const Jet eta_x = pair(eta(x), x_field(x));
  const Vec xv = values(x_field(x)), yv = values(y_field(x));
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += xv[i] * eta_y.d(static_cast<int>(i)) - yv[i] * eta_x.d(static_cast<int>(i));
  return s - dot(eval_values(eta, p), lie_bracket(x_field, y_field, p));
}

inline double exterior_derivative_1form(const VectorField& eta, const Point& p, const Vec& x, const Vec& y) {
  return exterior_derivative_1form(eta, p, constant_field(x), constant_field(y));
}

inline Jet two_form_pair(const Matrix<Jet>& phi, std::span<const Jet> a, std::span<const Jet> b) {
  Jet s;
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j) s += phi(i, j) * a[i] * b[j];
  return s;
}

// Unnormalised Palais sum for a 2-form (equals 3 dPhi in the 1/3 convention):
// X Phi(Y,Z) + Y Phi(Z,X) + Z Phi(X,Y) - Phi([X,Y],Z) - Phi([Z,X],Y) - Phi([Y,Z],X).
// `phi` holds the form's components as first-order jets at p.
inline double exterior_derivative_2form(const Matrix<Jet>& phi, const Point& p, const VectorField& xf,
                                        const VectorField& yf, const VectorField& zf) {
  const JetVec x = lift_point(p, 1);
  const JetVec X = xf(x), Y = yf(x), Z = zf(x);
  const Jet pyz = two_form_pair(phi, Y, Z), pzx = two_form_pair(phi, Z, X), pxy = two_form_pair(phi, X, Y);
  const Vec xv = values(X), yv = values(Y), zv = values(Z);
  const Matrix<double> pv = values(phi);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int ii = static_cast<int>(i);
    s += xv[i] * pyz.d(ii) + yv[i] * pzx.d(ii) + zv[i] * pxy.d(ii);
  }
  s -= bilinear(pv, lie_bracket(xf, yf, p), zv);
  s -= bilinear(pv, lie_bracket(zf, xf, p), yv);
  s -= bilinear(pv, lie_bracket(yf, zf, p), xv);
  return s;
}

inline double exterior_derivative_2form(const TensorField& phi_form, const Point& p, const VectorField& xf,
                                        const VectorField& yf, const VectorField& zf) {
  return exterior_derivative_2form(phi_form(lift_point(p, 1)), p, xf, yf, zf);
}

inline double exterior_derivative_2form(const TensorField& phi_form, const Point& p, const Vec& x, const Vec& y,
                                        const Vec& z) {
  return exterior_derivative_2form(phi_form, p, constant_field(x), constant_field(y), constant_field(z));
}

}  // namespace consas
