#pragma once

// Immersed submanifolds of a conformal Sasakian space.
//
// Everything is evaluated in the source chart of the immersion.  The map is
// lifted to third-order jets in the source variables, so E_i = d_i(iota) and
// the normal frame are second-order jets and the derived objects (h, A, S,
// P, F, t, f_nor) are first-order jets: enough for one more covariant
// derivative.  Ambient Christoffel symbols and the Lee vector are pulled back
// by composing their ambient jets with the immersion.
//
// Probe vectors on the submanifold are source-coordinate-constant; normal
// probes are constant combinations of the adapted normal frame.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "consas/conformal.hpp"

namespace consas {

struct Immersion {
  std::string id;
  int source_dim = 0;
  VectorField map;  // source coordinates -> ambient coordinates
  Box domain;
};

// Which ambient coordinate vectors seed the normal Gram-Schmidt, and an
// optional constant orthogonal mixing of the resulting frame.
struct NormalFrameChoice {
  std::vector<int> candidates;
  std::optional<Matrix<double>> rotation;
};

namespace detail {

template <typename T>
T inner(const Matrix<T>& g, const std::vector<T>& a, const std::vector<T>& b) {
  T s(0.0);
  for (int i = 0; i < g.rows(); ++i) {
    T r(0.0);
    for (int j = 0; j < g.cols(); ++j) r += g(i, j) * b[j];
    s += a[i] * r;
  }
  return s;
}

inline JetVec truncate(const JetVec& v, int order) {
  JetVec out;
  out.reserve(v.size());
  for (const Jet& x : v) out.push_back(x.truncated(order));
  return out;
}

inline Matrix<Jet> truncate(const Matrix<Jet>& m, int order) {
  return m.map([order](const Jet& x) { return x.truncated(order); });
}

inline JetVec d(const JetVec& v, int k) {
  JetVec out;
  out.reserve(v.size());
  for (const Jet& x : v) out.push_back(x.derivative(k));
  return out;
}

inline JetVec axpy(const JetVec& y, const Jet& a, const JetVec& x) {
  JetVec out = y;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return out;
}

}  // namespace detail

// Tangent frame values at a source point (d iota applied to d_i).
inline Matrix<double> tangent_frame(const Immersion& imm, const Point& src) {
  const JetVec x = imm.map(lift_point(src, 1));
  Matrix<double> e(static_cast<int>(x.size()), imm.source_dim);
  for (int k = 0; k < e.rows(); ++k)
    for (int i = 0; i < imm.source_dim; ++i) e(k, i) = x[k].d(i);
  return e;
}

// Greedy, deterministic choice of ambient coordinate vectors to seed the
// normal frame: at the centre of the source box, repeatedly take the basis
// vector with the largest g-norm after removing the tangent space and the
// directions already taken.  Ties go to the lower index.
inline std::vector<int> choose_normal_candidates(const ConformalSasakianSpace& space, const Immersion& imm) {
  const Point c = imm.domain.center();
  const Matrix<double> e = tangent_frame(imm, c);
  const int n = e.rows(), m = e.cols();
  const Matrix<double> g = metric_at(space.base.chart, eval_values(imm.map, c));
  std::vector<Vec> basis;  // orthonormal, tangent first
  auto reduce = [&](Vec v) {
    for (const Vec& b : basis) v -= bilinear(g, b, v) * b;
    return v;
  };
  for (int i = 0; i < m; ++i) {
    Vec v(n);
    for (int k = 0; k < n; ++k) v[k] = e(k, i);
    v = reduce(v);
    const double nv = std::sqrt(bilinear(g, v, v));
    if (!(nv > 1e-8)) throw GeometryError("immersion '" + imm.id + "' is not of full rank at the centre");
    basis.push_back((1.0 / nv) * v);
  }
  std::vector<int> chosen;
  for (int a = 0; a < n - m; ++a) {
    int best = -1;
    double best_norm = 0.0;
    for (int k = 0; k < n; ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      const Vec r = reduce(basis_vector(n, k));
      const double nr = std::sqrt(bilinear(g, r, r));
      if (nr > best_norm + 1e-12) {
        best = k;
        best_norm = nr;
      }
    }
    if (best < 0 || best_norm < 1e-10) throw GeometryError("normal frame selection failed for '" + imm.id + "'");
    chosen.push_back(best);
    const Vec r = reduce(basis_vector(n, best));
    basis.push_back((1.0 / best_norm) * r);
  }
  return chosen;
}

// All induced objects of an immersion at one source point.
class SubmanifoldPoint {
 public:
  SubmanifoldPoint(const ConformalSasakianSpace& space, const Immersion& imm, const Point& src,
                   const NormalFrameChoice& frame)
      : m_(imm.source_dim), src_(src) {
    const JetVec s = lift_point(src, 3);
    const JetVec x3 = imm.map(s);
    n_ = static_cast<int>(x3.size());
    p_ = n_ - m_;
    if (p_ < 0) throw GeometryError("immersion target dimension below source dimension");
    if (static_cast<int>(frame.candidates.size()) != p_) throw GeometryError("normal frame candidate count mismatch");
    q_ = values(x3);
    amb_.emplace(space, q_);

    const JetVec x2 = detail::truncate(x3, 2), x1 = detail::truncate(x3, 1);

    // Order 2: tangent frame, ambient metric, induced metric, normal frame.
    std::vector<JetVec> e2;
    for (int i = 0; i < m_; ++i) e2.push_back(detail::d(x3, i));
    const Matrix<Jet> g2 = space.base.chart.metric(x2);
    Matrix<Jet> gi2(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) gi2(i, j) = detail::inner(g2, e2[i], e2[j]);
    Matrix<Jet> gi2_inv;
    try {
      gi2_inv = inverse(gi2);
    } catch (const SingularMatrixError&) {
      throw GeometryError("immersion '" + imm.id + "' is rank deficient at a sample");
    }
    if (!(std::sqrt(std::max(0.0, min_eigenvalue(values(gi2)))) > 1e-8))
      throw GeometryError("immersion '" + imm.id + "' is rank deficient at a sample");

    std::vector<JetVec> n2;
    for (int a = 0; a < p_; ++a) {
      JetVec v(n_, x2[0].constant_like(0.0));
      v[frame.candidates[a]] = x2[0].constant_like(1.0);
      // remove the tangent part, then the earlier normals (modified Gram-Schmidt)
      std::vector<Jet> c(m_);
      for (int j = 0; j < m_; ++j) c[j] = detail::inner(g2, e2[j], v);
      for (int i = 0; i < m_; ++i) {
        Jet u = x2[0].constant_like(0.0);
        for (int j = 0; j < m_; ++j) u += gi2_inv(i, j) * c[j];
        v = detail::axpy(v, -u, e2[i]);
      }
      for (const JetVec& nb : n2) v = detail::axpy(v, -detail::inner(g2, nb, v), nb);
      const Jet nn = detail::inner(g2, v, v);
      if (!(nn.value() > 1e-20)) throw GeometryError("Gram-Schmidt breakdown in normal frame");
      const Jet inv_norm = 1.0 / sqrt(nn);
      for (Jet& comp : v) comp *= inv_norm;
      n2.push_back(std::move(v));
    }
    if (frame.rotation) {
      const Matrix<double>& r = *frame.rotation;
      std::vector<JetVec> mixed;
      for (int a = 0; a < p_; ++a) {
        JetVec v(n_, x2[0].constant_like(0.0));
        for (int b = 0; b < p_; ++b)
          for (int k = 0; k < n_; ++k) v[k] += r(a, b) * n2[b][k];
        mixed.push_back(std::move(v));
      }
      n2 = std::move(mixed);
    }

    // Induced connection and curvature.
    gamma_i_ = christoffel_jets(gi2);
    riemann_i_ = riemann_from_christoffel(gamma_i_, m_);

    // Values.
    g_ = values(g2);
    gi_ = values(gi2);
    gi_inv_ = values(gi2_inv);
    e_ = Matrix<double>(n_, m_);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < m_; ++i) e_(k, i) = e2[i][k].value();
    for (const JetVec& v : n2) n_vals_.push_back(values(v));
    dn_vals_.assign(static_cast<std::size_t>(m_) * p_, Vec());
    for (int k = 0; k < m_; ++k)
      for (int a = 0; a < p_; ++a) dn_vals_[k * p_ + a] = values(detail::d(n2[a], k));

    // Order 1: pulled-back ambient data and the derived tensors.
    const JetVec gamma_amb_ambient = amb_->geo().gamma_jets();
    gamma_a_.reserve(gamma_amb_ambient.size());
    for (const Jet& gj : gamma_amb_ambient) gamma_a_.push_back(compose(gj, x1));
    omega_sharp_.clear();
    for (const Jet& w : amb_->omega_sharp_jets()) omega_sharp_.push_back(compose(w, x1));

    const Matrix<Jet> g1 = detail::truncate(g2, 1);
    const Matrix<Jet> gi1_inv = detail::truncate(gi2_inv, 1);
    std::vector<JetVec> e1, n1;
    for (const JetVec& v : e2) e1.push_back(detail::truncate(v, 1));
    for (const JetVec& v : n2) n1.push_back(detail::truncate(v, 1));
    const Matrix<Jet> phi1 = space.base.phi(x1);

    auto conn = [&](const JetVec& u, const JetVec& v) {
      JetVec out(n_, x1[0].constant_like(0.0));
      for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) out[k] += gamma_a_[(k * n_ + i) * n_ + j] * u[i] * v[j];
      return out;
    };
    auto tangent_coords = [&](const JetVec& v) {
      std::vector<Jet> c(m_), u(m_, x1[0].constant_like(0.0));
      for (int j = 0; j < m_; ++j) c[j] = detail::inner(g1, e1[j], v);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) u[i] += gi1_inv(i, j) * c[j];
      return u;
    };
    auto normal_coords = [&](const JetVec& v) {
      std::vector<Jet> c;
      for (int a = 0; a < p_; ++a) c.push_back(detail::inner(g1, n1[a], v));
      return c;
    };

    const Jet zero = x1[0].constant_like(0.0);
    h_.assign(static_cast<std::size_t>(p_) * m_ * m_, zero);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        JetVec de = detail::d(e2[j], i);
        const JetVec c = conn(e1[i], e1[j]);
        for (int k = 0; k < n_; ++k) de[k] += c[k];
        const std::vector<Jet> nc = normal_coords(de);
        for (int a = 0; a < p_; ++a) h_[(a * m_ + i) * m_ + j] = nc[a];
      }
    a_.assign(static_cast<std::size_t>(p_) * m_ * m_, zero);
    s_.assign(static_cast<std::size_t>(p_) * p_ * m_, zero);
    for (int k = 0; k < m_; ++k)
      for (int a = 0; a < p_; ++a) {
        JetVec dn = detail::d(n2[a], k);
        const JetVec c = conn(e1[k], n1[a]);
        for (int l = 0; l < n_; ++l) dn[l] += c[l];
        const std::vector<Jet> tc = tangent_coords(dn);
        for (int l = 0; l < m_; ++l) a_[(a * m_ + l) * m_ + k] = -tc[l];
        const std::vector<Jet> nc = normal_coords(dn);
        for (int b = 0; b < p_; ++b) s_[(b * p_ + a) * m_ + k] = nc[b];
      }

    p_j_.assign(static_cast<std::size_t>(m_) * m_, zero);
    f_j_.assign(static_cast<std::size_t>(p_) * m_, zero);
    t_j_.assign(static_cast<std::size_t>(m_) * p_, zero);
    fn_j_.assign(static_cast<std::size_t>(p_) * p_, zero);
    for (int j = 0; j < m_; ++j) {
      const JetVec pe = phi1.apply(e1[j]);
      const std::vector<Jet> tc = tangent_coords(pe), nc = normal_coords(pe);
      for (int i = 0; i < m_; ++i) p_j_[i * m_ + j] = tc[i];
      for (int b = 0; b < p_; ++b) f_j_[b * m_ + j] = nc[b];
    }
    for (int a = 0; a < p_; ++a) {
      const JetVec pn = phi1.apply(n1[a]);
      const std::vector<Jet> tc = tangent_coords(pn), nc = normal_coords(pn);
      for (int i = 0; i < m_; ++i) t_j_[i * p_ + a] = tc[i];
      for (int b = 0; b < p_; ++b) fn_j_[b * p_ + a] = nc[b];
    }
  }

  int dim() const { return m_; }
  int ambient_dim() const { return n_; }
  int codim() const { return p_; }
  const Point& source_point() const { return src_; }
  const Point& ambient_point() const { return q_; }
  const ConformalPoint& ambient() const { return *amb_; }

  // -- frames and projections -------------------------------------------
  const Matrix<double>& tangent_frame() const { return e_; }
  const Vec& normal(int a) const { return n_vals_[a]; }

  // d iota (u)
  Vec push(const Vec& u) const { return mul(e_, u); }
  // sum_a c_a N_a
  Vec normal_vector(const Vec& c) const {
    Vec v(n_, 0.0);
    for (int a = 0; a < p_; ++a) v += c[a] * n_vals_[a];
    return v;
  }
  // Source components of tan(V).
  Vec tan_coords(const Vec& v) const {
    Vec c(m_);
    const Vec gv = mul(g_, v);
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < n_; ++k) c[j] += e_(k, j) * gv[k];
    return mul(gi_inv_, c);
  }
  // Normal-frame components of nor(V).
  Vec nor_coords(const Vec& v) const {
    Vec c(p_);
    for (int a = 0; a < p_; ++a) c[a] = bilinear(g_, n_vals_[a], v);
    return c;
  }
  Vec tan(const Vec& v) const { return push(tan_coords(v)); }
  Vec nor(const Vec& v) const { return normal_vector(nor_coords(v)); }

  double g(const Vec& a, const Vec& b) const { return bilinear(g_, a, b); }
  // Induced metric on source components.
  double gi(const Vec& u, const Vec& v) const { return bilinear(gi_, u, v); }
  const Matrix<double>& induced_metric() const { return gi_; }
  const Matrix<double>& induced_metric_inverse() const { return gi_inv_; }
  // Normal-frame components are orthonormal, so their inner product is Euclidean.
  static double gn(const Vec& a, const Vec& b) { return dot(a, b); }

  // -- induced connection and curvature ---------------------------------
  double induced_gamma(int k, int i, int j) const { return gamma_i_[(k * m_ + i) * m_ + j].value(); }
  Vec induced_connection(const Vec& u, const Vec& v) const {
    Vec out(m_, 0.0);
    for (int k = 0; k < m_; ++k)
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) out[k] += induced_gamma(k, i, j) * u[i] * v[j];
    return out;
  }
  // R'(u,v)w in source components.
  Vec induced_riemann(const Vec& u, const Vec& v, const Vec& w) const {
    Vec out(m_, 0.0);
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
          for (int k = 0; k < m_; ++k) out[l] += riemann_i_[((l * m_ + i) * m_ + j) * m_ + k] * u[i] * v[j] * w[k];
    return out;
  }
  // g'(R'(u,v)w, z)
  double induced_curvature_4(const Vec& u, const Vec& v, const Vec& w, const Vec& z) const {
    return gi(induced_riemann(u, v, w), z);
  }

  // -- second fundamental form, shape operators, normal connection -------
  // h(u,v) in normal-frame components.
  Vec h(const Vec& u, const Vec& v) const {
    Vec out(p_, 0.0);
    for (int a = 0; a < p_; ++a)
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) out[a] += h_[(a * m_ + i) * m_ + j].value() * u[i] * v[j];
    return out;
  }
  Vec h_ambient(const Vec& u, const Vec& v) const { return normal_vector(h(u, v)); }

  // A_{N_a} u (source components).
  Vec A(int a, const Vec& u) const {
    Vec out(m_, 0.0);
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i) out[l] += a_[(a * m_ + l) * m_ + i].value() * u[i];
    return out;
  }
  // A_N u for N = sum_a c_a N_a.
  Vec A_normal(const Vec& c, const Vec& u) const {
    Vec out(m_, 0.0);
    for (int a = 0; a < p_; ++a)
      if (c[a] != 0.0) out += c[a] * A(a, u);
    return out;
  }
  Matrix<double> A_matrix(int a) const {
    Matrix<double> out(m_, m_);
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i) out(l, i) = a_[(a * m_ + l) * m_ + i].value();
    return out;
  }

  // S_ba(u) = g(nabla-perp_u N_a, N_b), as a p x p matrix indexed (b, a).
  Matrix<double> S(const Vec& u) const {
    Matrix<double> out(p_, p_);
    for (int b = 0; b < p_; ++b)
      for (int a = 0; a < p_; ++a)
        for (int k = 0; k < m_; ++k) out(b, a) += s_[(b * p_ + a) * m_ + k].value() * u[k];
    return out;
  }

  // Same coefficients assembled from frame derivatives and first-kind
  // Christoffel symbols of the ambient metric (no inverse metric involved).
  Matrix<double> S_from_christoffel(const Vec& u) const {
    const LocalGeometry& geo = amb_->geo();
    const Vec eu = push(u);
    Matrix<double> out(p_, p_);
    for (int a = 0; a < p_; ++a) {
      Vec dn(n_, 0.0);
      for (int k = 0; k < m_; ++k) dn += u[k] * dn_vals_[k * p_ + a];
      for (int b = 0; b < p_; ++b) {
        double s = g(dn, n_vals_[b]);
        for (int l = 0; l < n_; ++l)
          for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += geo.GammaFirst(l, i, j) * n_vals_[b][l] * eu[i] * n_vals_[a][j];
        out(b, a) = s;
      }
    }
    return out;
  }

  // nabla-perp_u N for N = sum c_a N_a with constant c (normal components).
  Vec nabla_perp(const Vec& u, const Vec& c) const { return mul(S(u), c); }

  // g(R-perp(u,v) N_a, N_b) as a p x p matrix indexed (b, a).
  Matrix<double> normal_curvature(const Vec& u, const Vec& v) const {
    Matrix<double> out(p_, p_);
    for (int b = 0; b < p_; ++b)
      for (int a = 0; a < p_; ++a) {
        double s = 0.0;
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) {
            const double w = u[i] * v[j];
            if (w == 0.0) continue;
            double r = sd(b, a, j, i) - sd(b, a, i, j);
            for (int c = 0; c < p_; ++c) r += sv(b, c, i) * sv(c, a, j) - sv(b, c, j) * sv(c, a, i);
            s += w * r;
          }
        out(b, a) = s;
      }
    return out;
  }
  // R-perp(u,v)N in normal components, N = sum c_a N_a.
  Vec normal_curvature(const Vec& u, const Vec& v, const Vec& c) const { return mul(normal_curvature(u, v), c); }

  // (nabla'_u A_a) v
  Vec nabla_A(int a, const Vec& u, const Vec& v) const {
    return nabla_11(u, v, [&](int l, int j) -> const Jet& { return a_[(a * m_ + l) * m_ + j]; });
  }

  // Mean curvature vector, normal components: trace of h over g' divided by m.
  Vec mean_curvature() const {
    Vec out(p_, 0.0);
    if (m_ == 0) return out;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) out += gi_inv_(i, j) * h(basis_vector(m_, i), basis_vector(m_, j));
    return (1.0 / m_) * out;
  }

  // -- P, F, t, f_nor -----------------------------------------------------
  Vec P(const Vec& u) const { return contract(p_j_, m_, m_, u); }
  Vec F(const Vec& u) const { return contract(f_j_, p_, m_, u); }
  Vec t(const Vec& c) const { return contract(t_j_, m_, p_, c); }
  Vec f_nor(const Vec& c) const { return contract(fn_j_, p_, p_, c); }

  // (nabla'_u P) v
  Vec nabla_P(const Vec& u, const Vec& v) const {
    return nabla_11(u, v, [&](int l, int j) -> const Jet& { return p_j_[l * m_ + j]; });
  }
  // (nabla'_u F) v = nabla-perp_u (F v) - F(nabla'_u v), normal components.
  Vec nabla_F(const Vec& u, const Vec& v) const {
    Vec out = directional(f_j_, p_, m_, u, v) + mul(S(u), F(v));
    return out - F(induced_connection(u, v));
  }
  // (nabla'_u t) N = nabla'_u (t N) - t(nabla-perp_u N), source components.
  Vec nabla_t(const Vec& u, const Vec& c) const {
    Vec out = directional(t_j_, m_, p_, u, c) + induced_connection(u, t(c));
    return out - t(nabla_perp(u, c));
  }
  // (nabla'_u f_nor) N, normal components.
  Vec nabla_f_nor(const Vec& u, const Vec& c) const {
    Vec out = directional(fn_j_, p_, p_, u, c) + mul(S(u), f_nor(c));
    return out - f_nor(nabla_perp(u, c));
  }

  // -- conformal data restricted to the submanifold --------------------------
  Vec omega_sharp_tan() const { return tan_coords(amb_->omega_sharp()); }
  Vec omega_sharp_nor() const { return nor_coords(amb_->omega_sharp()); }
  Vec xi_tan() const { return tan_coords(amb_->xi()); }
  Vec xi_nor() const { return nor_coords(amb_->xi()); }
  Vec phi_omega_tan() const { return tan_coords(amb_->phi(amb_->omega_sharp())); }
  Vec phi_omega_nor() const { return nor_coords(amb_->phi(amb_->omega_sharp())); }
  // B(u,v) + omega(h(u,v))
  double B_mod(const Vec& u, const Vec& v) const {
    return amb_->B(push(u), push(v)) + amb_->omega(h_ambient(u, v));
  }
  // Pulled-back Lee vector as first-order jets (ambient components).
  const JetVec& omega_sharp_jets() const { return omega_sharp_; }

 private:
  double sv(int b, int a, int k) const { return s_[(b * p_ + a) * m_ + k].value(); }
  // d_l S_ba(k)
  double sd(int b, int a, int k, int l) const { return s_[(b * p_ + a) * m_ + k].d(l); }

  static Vec contract(const std::vector<Jet>& t, int rows, int cols, const Vec& v) {
    Vec out(rows, 0.0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out[r] += t[r * cols + c].value() * v[c];
    return out;
  }
  // u^k d_k(T) v for a jet-valued matrix T.
  Vec directional(const std::vector<Jet>& t, int rows, int cols, const Vec& u, const Vec& v) const {
    Vec out(rows, 0.0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        for (int k = 0; k < m_; ++k) out[r] += t[r * cols + c].d(k) * u[k] * v[c];
    return out;
  }
  template <typename Get>
  Vec nabla_11(const Vec& u, const Vec& v, Get get) const {
    Vec out(m_, 0.0);
    for (int l = 0; l < m_; ++l)
      for (int j = 0; j < m_; ++j) {
        if (v[j] == 0.0) continue;
        double s = 0.0;
        for (int k = 0; k < m_; ++k) {
          if (u[k] == 0.0) continue;
          double r = get(l, j).d(k);
          for (int i = 0; i < m_; ++i)
            r += induced_gamma(l, k, i) * get(i, j).value() - induced_gamma(i, k, j) * get(l, i).value();
          s += u[k] * r;
        }
        out[l] += s * v[j];
      }
    return out;
  }

  int m_ = 0, n_ = 0, p_ = 0;
  Point src_, q_;
  std::optional<ConformalPoint> amb_;
  Matrix<double> g_, gi_, gi_inv_, e_;
  std::vector<Vec> n_vals_, dn_vals_;
  JetVec gamma_i_;
  std::vector<double> riemann_i_;
  JetVec gamma_a_, omega_sharp_;
  std::vector<Jet> h_, a_, s_, p_j_, f_j_, t_j_, fn_j_;
};

// (nabla'_u P)v - RHS with the printed groups; P-equation.
// All vectors are source components of tangential quantities.
inline Relation structure_P_relation(const SubmanifoldPoint& sp, const Vec& u, const Vec& v) {
  const ConformalPoint& cp = sp.ambient();
  const Vec U = sp.push(u), V = sp.push(v);
  const double e = cp.exp_half_f();
  Relation r;
  r.lhs = sp.nabla_P(u, v);
  r.add("sasaki", e * (sp.gi(u, v) * sp.xi_tan() - cp.eta(V) * u));
  r.add("A_F", sp.A_normal(sp.F(v), u));
  r.add("t_h", sp.t(sp.h(u, v)));
  r.add("lee", -0.5 * (cp.omega(cp.phi(V)) * u - cp.omega(V) * sp.P(u) + sp.gi(u, v) * sp.phi_omega_tan() -
                       cp.g(U, cp.phi(V)) * sp.omega_sharp_tan()));
  return r;
}

// (nabla'_u F)v in normal components.  The printed display lacks the
// e^{f/2} g(X,Y) xi-perp term that the normal part of the Sasakian group
// contributes; it is carried as a correction.
inline Relation structure_F_relation(const SubmanifoldPoint& sp, const Vec& u, const Vec& v) {
  const ConformalPoint& cp = sp.ambient();
  const Vec U = sp.push(u), V = sp.push(v);
  Relation r;
  r.lhs = sp.nabla_F(u, v);
  r.add("f_h", sp.f_nor(sp.h(u, v)));
  r.add("h_P", -1.0 * sp.h(u, sp.P(v)));
  r.add("lee", 0.5 * (cp.omega(V) * sp.F(u) - sp.gi(u, v) * sp.phi_omega_nor() +
                      cp.g(U, cp.phi(V)) * sp.omega_sharp_nor()));
  r.correct("sasaki_normal", cp.exp_half_f() * sp.gi(u, v) * sp.xi_nor());
  return r;
}

// (nabla'_u t)N, source components.  The printed display lacks
// -e^{f/2} eta(N) X; carried as a correction.
inline Relation structure_t_relation(const SubmanifoldPoint& sp, const Vec& u, const Vec& c) {
  const ConformalPoint& cp = sp.ambient();
  const Vec U = sp.push(u), N = sp.normal_vector(c);
  Relation r;
  r.lhs = sp.nabla_t(u, c);
  r.add("A_f", sp.A_normal(sp.f_nor(c), u));
  r.add("P_A", -1.0 * sp.P(sp.A_normal(c, u)));
  r.add("lee", -0.5 * (-cp.omega(N) * sp.P(u) + cp.omega(cp.phi(N)) * u - cp.g(U, cp.phi(N)) * sp.omega_sharp_tan()));
  r.correct("sasaki_eta", -cp.exp_half_f() * cp.eta(N) * u);
  return r;
}

// (nabla'_u f_nor)N, normal components.
inline Relation structure_f_relation(const SubmanifoldPoint& sp, const Vec& u, const Vec& c) {
  const ConformalPoint& cp = sp.ambient();
  const Vec U = sp.push(u), N = sp.normal_vector(c);
  Relation r;
  r.lhs = sp.nabla_f_nor(u, c);
  r.add("h_t", -1.0 * sp.h(u, sp.t(c)));
  r.add("F_A", -1.0 * sp.F(sp.A_normal(c, u)));
  r.add("lee", 0.5 * (cp.omega(N) * sp.F(u) + cp.g(U, cp.phi(N)) * sp.omega_sharp_nor()));
  return r;
}

struct Classification {
  bool invariant = false, anti_invariant = false;
  bool xi_tangent = false, xi_normal = false;
  bool lee_tangent = false, lee_normal = false;
  double max_F = 0.0, max_P = 0.0, max_xi_nor = 0.0, max_xi_tan = 0.0, max_lee_nor = 0.0, max_lee_tan = 0.0;
};

inline void accumulate(Classification& c, const SubmanifoldPoint& sp) {
  const int m = sp.dim();
  for (int i = 0; i < m; ++i) {
    const Vec e = basis_vector(m, i);
    // g-norms: tangential parts through g', normal parts are orthonormal
    const Vec pe = sp.P(e), fe = sp.F(e);
    c.max_P = std::max(c.max_P, std::sqrt(std::max(0.0, sp.gi(pe, pe))));
    c.max_F = std::max(c.max_F, std::sqrt(dot(fe, fe)));
  }
  auto norm_t = [&](const Vec& v) { return std::sqrt(std::max(0.0, sp.gi(v, v))); };
  auto norm_n = [&](const Vec& v) { return std::sqrt(dot(v, v)); };
  c.max_xi_nor = std::max(c.max_xi_nor, norm_n(sp.xi_nor()));
  c.max_xi_tan = std::max(c.max_xi_tan, norm_t(sp.xi_tan()));
  c.max_lee_nor = std::max(c.max_lee_nor, norm_n(sp.omega_sharp_nor()));
  c.max_lee_tan = std::max(c.max_lee_tan, norm_t(sp.omega_sharp_tan()));
}

inline void finish(Classification& c, double tol) {
  c.invariant = c.max_F <= tol;
  c.anti_invariant = c.max_P <= tol;
  c.xi_tangent = c.max_xi_nor <= tol;
  c.xi_normal = c.max_xi_tan <= tol;
  c.lee_tangent = c.max_lee_nor <= tol;
  c.lee_normal = c.max_lee_tan <= tol;
}

// Classify over `samples` seeded source points.
inline Classification classify(const ConformalSasakianSpace& space, const Immersion& imm, int samples,
                               std::uint64_t seed = 1, double tol = 1e-9) {
  const NormalFrameChoice frame{choose_normal_candidates(space, imm), std::nullopt};
  Rng rng(seed);
  Classification c;
  for (int s = 0; s < samples; ++s) accumulate(c, SubmanifoldPoint(space, imm, imm.domain.sample(rng), frame));
  finish(c, tol);
  return c;
}

}  // namespace consas
