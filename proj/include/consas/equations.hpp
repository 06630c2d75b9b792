#pragma once

// Submanifold-level relations: Gauss, Codazzi, Ricci, the invariant and
// anti-invariant identities, and the CR relations.  Every function returns a
// Relation whose printed groups follow the displayed formula and whose
// correction groups carry the terms a rederivation adds.
//
// Tangential vectors are in source components, normal vectors in adapted
// normal-frame components, ambient vectors in ambient chart components.

#include <cmath>
#include <functional>
#include <vector>

#include "consas/submanifold.hpp"

namespace consas {

namespace detail {

// Raise a linear functional W -> fn(W) on the tangent space with g'.
inline Vec raise_functional(const SubmanifoldPoint& sp, const std::function<double(const Vec&)>& fn) {
  const int m = sp.dim();
  Vec form(m);
  for (int j = 0; j < m; ++j) form[j] = fn(basis_vector(m, j));
  return mul(sp.induced_metric_inverse(), form);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fundamental equations

// Gauss equation.  The curvature 4-tensors in this display are read as
// R(X,Y,Z,W) = g(R(X,Y)W, Z) on both sides; with that reading every printed
// group closes.
inline Relation gauss_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y), Z = sp.push(z), W = sp.push(w);
  const auto& tg = cp.tilde().geometry();
  Relation r = scalar_relation(std::exp(-cp.f()) * tg.curvature_4(X, Y, W, Z));
  r.add("R_induced", Vec{sp.induced_curvature_4(x, y, w, z)});
  r.add("B", Vec{-0.5 * (cp.B(X, Z) * sp.gi(y, w) - cp.B(Y, Z) * sp.gi(x, w) + cp.B(Y, W) * sp.gi(x, z) -
                         cp.B(X, W) * sp.gi(y, z))});
  r.add("lee_norm", Vec{-0.25 * cp.lee_norm_sq() * (sp.gi(x, z) * sp.gi(y, w) - sp.gi(y, z) * sp.gi(x, w))});
  double a_sum = 0.0;
  for (int a = 0; a < sp.codim(); ++a)
    a_sum += sp.gi(sp.A(a, y), z) * sp.gi(sp.A(a, x), w) - sp.gi(sp.A(a, x), z) * sp.gi(sp.A(a, y), w);
  r.add("shape", Vec{a_sum});
  return r;
}

// Codazzi equation for the normal N_a.  The S-sum enters with the opposite
// sign and the Lee group is missing -1/4 omega(N_a) omega(.) g'(.,Z) terms
// (B instead of nabla omega); both differences are correction groups.
inline Relation codazzi_relation(const SubmanifoldPoint& sp, int a, const Vec& x, const Vec& y, const Vec& z) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y), Z = sp.push(z), N = sp.normal(a);
  Relation r = scalar_relation(std::exp(-cp.f()) * cp.tilde().geometry().curvature_4(X, Y, Z, N));
  r.add("codazzi", Vec{sp.gi(sp.nabla_A(a, x, y) - sp.nabla_A(a, y, x), z)});
  const Matrix<double> sx = sp.S(x), sy = sp.S(y);
  double s_sum = 0.0;
  for (int b = 0; b < sp.codim(); ++b) s_sum += sx(b, a) * sp.gi(sp.A(b, y), z) - sy(b, a) * sp.gi(sp.A(b, x), z);
  r.add("S_sum", Vec{s_sum});
  r.add("lee", Vec{0.5 * (sp.gi(x, z) * cp.g(cp.nabla_omega_sharp(Y), N) -
                          sp.gi(y, z) * cp.g(cp.nabla_omega_sharp(X), N))});
  r.correct("S_sum:sign", Vec{-2.0 * s_sum});
  r.correct("lee:B_not_nabla_omega", Vec{0.25 * cp.omega(N) * (cp.omega(X) * sp.gi(y, z) - cp.omega(Y) * sp.gi(x, z))});
  return r;
}

// Ricci equation for the pair (N_a, N_b), standard reading.
inline Relation ricci_relation(const SubmanifoldPoint& sp, int a, int b, const Vec& x, const Vec& y) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y);
  Relation r = scalar_relation(std::exp(-cp.f()) *
                               cp.tilde().geometry().curvature_4(X, Y, sp.normal(a), sp.normal(b)));
  const Matrix<double> A_a = sp.A_matrix(a), A_b = sp.A_matrix(b);
  r.add("shape_commutator", Vec{sp.gi(mul(A_b * A_a - A_a * A_b, x), y)});
  r.add("normal_curvature", Vec{sp.normal_curvature(x, y)(b, a)});
  return r;
}

// ---------------------------------------------------------------------------
// Invariant submanifolds

// h(X, phi Y) = phi h(X,Y) - 1/2 {g(X,Y)(phi omega#)-perp - g(X, phi Y) omega#-perp}
inline Relation invariant_h_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y);
  Relation r;
  r.lhs = sp.h(x, sp.P(y));
  r.add("phi_h", sp.f_nor(sp.h(x, y)));
  r.add("lee", -0.5 * (sp.gi(x, y) * sp.phi_omega_nor() - cp.g(X, cp.phi(Y)) * sp.omega_sharp_nor()));
  return r;
}

// h(phi X, phi Y) + h(X,Y) = {g'(X,Y) - 1/2 eta(X) eta(Y)} omega#-perp
inline Relation invariant_hh_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y) {
  const ConformalPoint& cp = sp.ambient();
  Relation r;
  r.lhs = sp.h(sp.P(x), sp.P(y)) + sp.h(x, y);
  r.add("lee", (sp.gi(x, y) - 0.5 * cp.eta(sp.push(x)) * cp.eta(sp.push(y))) * sp.omega_sharp_nor());
  return r;
}

// h(xi, xi) = 1/2 omega#-perp
inline Relation invariant_hxi_relation(const SubmanifoldPoint& sp) {
  const Vec xi = sp.xi_tan();
  Relation r;
  r.lhs = sp.h(xi, xi);
  r.add("lee", 0.5 * sp.omega_sharp_nor());
  return r;
}

// m H = (n' + 1/2) omega#-perp with m = 2n' + 1.
inline Relation mean_curvature_relation(const SubmanifoldPoint& sp) {
  const int m = sp.dim();
  Relation r;
  r.lhs = static_cast<double>(m) * sp.mean_curvature();
  r.add("lee", (0.5 * (m - 1) + 0.5) * sp.omega_sharp_nor());
  return r;
}

// ---------------------------------------------------------------------------
// Anti-invariant submanifolds

// A_{phi Y} X = -phi h(X,Y) - e^{f/2}{g(X,Y) xi-top - eta(Y) X}
//               + 1/2 {omega(phi Y) X + g(X,Y) phi omega#-perp}   (tangential parts)
inline Relation anti_shape_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y) {
  const ConformalPoint& cp = sp.ambient();
  const Vec Y = sp.push(y);
  Relation r;
  r.lhs = sp.A_normal(sp.nor_coords(cp.phi(Y)), x);
  r.add("phi_h", -1.0 * sp.t(sp.h(x, y)));
  r.add("sasaki", -cp.exp_half_f() * (sp.gi(x, y) * sp.xi_tan() - cp.eta(Y) * x));
  r.add("lee", 0.5 * (cp.omega(cp.phi(Y)) * x +
                      sp.gi(x, y) * sp.tan_coords(cp.phi(sp.normal_vector(sp.omega_sharp_nor())))));
  return r;
}

namespace detail {

// -(<f h(X,W), f h(Y,Z)> - <f h(X,Z), f h(Y,W)>) + 1/2 (Lee terms with f omega#-perp):
// the contribution of the part of the normal bundle orthogonal to phi(TM).
inline double f_nor_terms(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z, const Vec& w) {
  auto fh = [&](const Vec& a, const Vec& b) { return sp.f_nor(sp.h(a, b)); };
  const Vec fo = sp.f_nor(sp.omega_sharp_nor());
  return -(dot(fh(x, w), fh(y, z)) - dot(fh(x, z), fh(y, w))) +
         0.5 * (sp.gi(y, z) * dot(fo, fh(x, w)) - sp.gi(y, w) * dot(fo, fh(x, z)) +
                sp.gi(x, w) * dot(fo, fh(y, z)) - sp.gi(x, z) * dot(fo, fh(y, w)));
}

}  // namespace detail

// g'([A_{phi Z}, A_{phi W}]X, Y) against the long expansion.  Groups:
//   h_h, omega_h, Phi_h_Y, Phi_h_X, lee_quadratic, sasaki_mixed, exp_f.
// Corrections: the Phi_h_X group is printed with h(Y,W) where h(Y,Z) belongs;
// the Lee norm in lee_quadratic is |t omega#-perp|^2, not |omega#|^2; and the
// f_nor terms appear when the normal bundle is larger than phi(TM).
inline Relation commutator_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z,
                                    const Vec& w) {
  const ConformalPoint& cp = sp.ambient();
  const double e = cp.exp_half_f();
  const Vec X = sp.push(x), Y = sp.push(y), Z = sp.push(z), W = sp.push(w);
  auto Aphi = [&](const Vec& v, const Vec& u) { return sp.A_normal(sp.nor_coords(cp.phi(sp.push(v))), u); };
  auto H = [&](const Vec& a, const Vec& b) { return sp.h_ambient(a, b); };
  auto Phi = [&](const Vec& a, const Vec& b) { return cp.g(a, cp.phi(b)); };
  auto om = [&](const Vec& a) { return cp.omega(a); };
  auto ph = [&](const Vec& a) { return cp.phi(a); };
  auto gi = [&](const Vec& a, const Vec& b) { return sp.gi(a, b); };
  auto eta = [&](const Vec& a) { return cp.eta(a); };

  Relation r = scalar_relation(gi(Aphi(w, x), Aphi(z, y)) - gi(Aphi(z, x), Aphi(w, y)));
  r.add("h_h", Vec{cp.g(H(x, w), H(y, z)) - cp.g(H(y, w), H(x, z))});
  r.add("omega_h", Vec{-0.5 * (gi(y, z) * om(H(x, w)) - gi(y, w) * om(H(x, z)) + gi(x, w) * om(H(y, z)) -
                               gi(x, z) * om(H(y, w)))});
  r.add("Phi_h_Y", Vec{-0.5 * (om(ph(Z)) * Phi(Y, H(x, w)) - om(ph(W)) * Phi(Y, H(x, z)))});
  const double phi_x_printed = -0.5 * (om(ph(W)) * Phi(X, H(y, w)) - om(ph(Z)) * Phi(X, H(y, w)));
  const double phi_x_fixed = -0.5 * (om(ph(W)) * Phi(X, H(y, z)) - om(ph(Z)) * Phi(X, H(y, w)));
  r.add("Phi_h_X", Vec{phi_x_printed});
  const double quad_gg = gi(x, z) * gi(y, w) - gi(x, w) * gi(y, z);
  r.add("lee_quadratic",
        Vec{-0.25 * (om(ph(W)) * om(ph(X)) * gi(y, z) - om(ph(Z)) * om(ph(X)) * gi(y, w) +
                     om(ph(Z)) * om(ph(Y)) * gi(x, w) - om(ph(W)) * om(ph(Y)) * gi(x, z) +
                     cp.lee_norm_sq() * quad_gg)});
  r.add("sasaki_mixed",
        Vec{-0.5 * e *
            (2 * eta(Z) * Phi(Y, H(x, w)) - 2 * eta(W) * Phi(Y, H(x, z)) + 2 * eta(W) * Phi(X, H(y, z)) -
             2 * eta(Z) * Phi(X, H(y, w)) + om(ph(Z)) * eta(Y) * gi(x, w) - om(ph(W)) * eta(Y) * gi(x, z) +
             om(ph(X)) * eta(W) * gi(y, z) - om(ph(X)) * eta(Z) * gi(y, w) + om(ph(W)) * eta(X) * gi(y, z) -
             om(ph(Z)) * eta(X) * gi(y, w) + om(ph(Y)) * eta(Z) * gi(x, w) - om(ph(Y)) * eta(W) * gi(x, z))});
  r.add("exp_f", Vec{e * e *
                     (gi(y, z) * gi(x, w) - gi(x, z) * gi(y, w) + gi(x, z) * eta(Y) * eta(W) -
                      gi(x, w) * eta(Y) * eta(Z) + gi(y, w) * eta(X) * eta(Z) - gi(y, z) * eta(X) * eta(W))});
  const Vec lt = sp.t(sp.omega_sharp_nor());
  r.correct("Phi_h_X:h(Y,W)->h(Y,Z)", Vec{phi_x_fixed - phi_x_printed});
  r.correct("lee_quadratic:|omega#|^2->|t omega#-perp|^2", Vec{-0.25 * (gi(lt, lt) - cp.lee_norm_sq()) * quad_gg});
  r.correct("f_nor_terms", Vec{detail::f_nor_terms(sp, x, y, z, w)});
  return r;
}

// R~(X,Y) phi Z = phi R~(X,Y)Z - g~(Y,Z) phi X + g~(X,Z) phi Y - g~(phi Y,Z) X + g~(phi X,Z) Y
// (ambient vectors, tilde structure).
inline Relation tilde_phi_curvature_relation(const ConformalPoint& cp, const Vec& x, const Vec& y, const Vec& z) {
  const auto& tg = cp.tilde().geometry();
  auto gt = [&](const Vec& a, const Vec& b) { return tg.inner(a, b); };
  auto ph = [&](const Vec& a) { return cp.phi(a); };
  Relation r;
  r.lhs = tg.riemann(x, y, ph(z));
  r.add("phi_R", ph(tg.riemann(x, y, z)));
  r.add("sasaki", -1.0 * gt(y, z) * ph(x) + gt(x, z) * ph(y) - gt(ph(y), z) * x + gt(ph(x), z) * y);
  return r;
}

// The same identity transported to the base structure.  Printed coefficient
// (1/4 |omega#|^2 + 1); the constant comes from g~ = e^f g and is e^f.  The
// last bracket term is printed g(X, phi Z) X and belongs to Y.
inline Relation base_phi_curvature_relation(const ConformalPoint& cp, const Vec& x, const Vec& y, const Vec& z) {
  const auto& geo = cp.geo();
  auto g = [&](const Vec& a, const Vec& b) { return cp.g(a, b); };
  auto ph = [&](const Vec& a) { return cp.phi(a); };
  const Vec pz = ph(z);
  const Vec bb = cp.B(x, pz) * y - cp.B(y, pz) * x + cp.B(y, z) * ph(x) - cp.B(x, z) * ph(y) +
                 g(x, pz) * cp.B_sharp(y) - g(y, pz) * cp.B_sharp(x) - g(x, z) * ph(cp.B_sharp(y)) +
                 g(y, z) * ph(cp.B_sharp(x));
  const Vec printed = g(y, z) * ph(x) - g(x, z) * ph(y) + g(x, pz) * x - g(y, pz) * x;
  const Vec fixed = g(y, z) * ph(x) - g(x, z) * ph(y) + g(x, pz) * y - g(y, pz) * x;
  const double c = 0.25 * cp.lee_norm_sq();
  const double ef = std::exp(cp.f());
  Relation r;
  r.lhs = geo.riemann(x, y, pz);
  r.add("phi_R", ph(geo.riemann(x, y, z)));
  r.add("B", -0.5 * bb);
  r.add("lee_norm_unit", -(c + 1.0) * printed);
  r.correct("lee_norm_unit:g(X,phiZ)X->g(X,phiZ)Y", -(c + 1.0) * (fixed - printed));
  r.correct("lee_norm_unit:1->exp(f)", -(ef - 1.0) * fixed);
  return r;
}

namespace detail {

struct PhiCurvatureTerms {
  double Rz, G1, eta_R, B, Q, AB, ee;
};

inline PhiCurvatureTerms phi_curvature_terms(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z,
                                             const Vec& w) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y), Z = sp.push(z), W = sp.push(w);
  auto gi = [&](const Vec& a, const Vec& b) { return sp.gi(a, b); };
  auto eta = [&](const Vec& a) { return cp.eta(a); };
  auto H = [&](const Vec& a, const Vec& b) { return sp.h_ambient(a, b); };
  PhiCurvatureTerms t{};
  t.Rz = sp.induced_curvature_4(x, y, z, w);
  t.G1 = cp.g(H(x, w), H(y, z)) - cp.g(H(y, w), H(x, z));
  t.eta_R = eta(cp.geo().riemann(X, Y, Z)) * eta(W);
  t.B = cp.B(Y, Z) * gi(x, w) - cp.B(X, Z) * gi(y, w) + cp.B(X, W) * gi(y, z) - cp.B(Y, W) * gi(x, z) +
        cp.B(X, Z) * eta(Y) * eta(W) - cp.B(Y, Z) * eta(X) * eta(W) + cp.B(Y, cp.xi()) * gi(x, z) * eta(W) -
        cp.B(X, cp.xi()) * gi(y, z) * eta(W);
  t.AB = gi(y, z) * gi(x, w) - gi(x, z) * gi(y, w);
  t.ee = gi(x, z) * eta(Y) * eta(W) - gi(y, z) * eta(X) * eta(W);
  t.Q = t.AB + t.ee;
  return t;
}

}  // namespace detail

// g(R-perp(X,Y) phi Z, phi W) - g'([A_{phi Z}, A_{phi W}]X, Y) against the
// Gauss-side expansion; same coefficient correction as above.
inline Relation normal_phi_curvature_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z,
                                              const Vec& w) {
  const ConformalPoint& cp = sp.ambient();
  const Vec pz = sp.nor_coords(cp.phi(sp.push(z))), pw = sp.nor_coords(cp.phi(sp.push(w)));
  const double comm = sp.gi(sp.A_normal(pw, x), sp.A_normal(pz, y)) - sp.gi(sp.A_normal(pz, x), sp.A_normal(pw, y));
  const auto t = detail::phi_curvature_terms(sp, x, y, z, w);
  Relation r = scalar_relation(dot(sp.normal_curvature(x, y, pz), pw) - comm);
  r.add("R_induced", Vec{t.Rz});
  r.add("h_h", Vec{-t.G1});
  r.add("eta_R", Vec{-t.eta_R});
  r.add("B", Vec{-0.5 * t.B});
  r.add("lee_norm_unit", Vec{-(0.25 * cp.lee_norm_sq() + 1.0) * t.Q});
  r.correct("lee_norm_unit:1->exp(f)", Vec{-(std::exp(cp.f()) - 1.0) * t.Q});
  return r;
}

// Phi(Y, h(X,Z)) = Phi(Z, h(X,Y)) - e^{f/2}{g'(X,Z) eta(Y) - g'(X,Y) eta(Z)}
//                  + 1/2 {omega(phi Z) g'(X,Y) - omega(phi Y) g'(X,Z)}
inline Relation phi_h_symmetry_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z) {
  const ConformalPoint& cp = sp.ambient();
  const Vec Y = sp.push(y), Z = sp.push(z);
  auto Phi = [&](const Vec& a, const Vec& b) { return cp.g(a, cp.phi(b)); };
  Relation r = scalar_relation(Phi(Y, sp.h_ambient(x, z)));
  r.add("Phi_h", Vec{Phi(Z, sp.h_ambient(x, y))});
  r.add("sasaki", Vec{-cp.exp_half_f() * (sp.gi(x, z) * cp.eta(Y) - sp.gi(x, y) * cp.eta(Z))});
  r.add("lee", Vec{0.5 * (cp.omega(cp.phi(Z)) * sp.gi(x, y) - cp.omega(cp.phi(Y)) * sp.gi(x, z))});
  return r;
}

// Right-hand side groups of the flat-normal characterisation, as tangent
// vectors (source components).  `sign` = +1 builds R'(X,Y)Z = RHS, -1 the
// negated groups used for -phi R-perp(X,Y) phi Z = R'(X,Y)Z - RHS.
inline void add_flat_normal_groups(Relation& r, const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z,
                                   double sign) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x), Y = sp.push(y), Z = sp.push(z);
  const Vec xi = sp.xi_tan();
  auto gi = [&](const Vec& a, const Vec& b) { return sp.gi(a, b); };
  auto eta = [&](const Vec& a) { return cp.eta(a); };
  auto bmod_sharp = [&](const Vec& a) {
    return detail::raise_functional(sp, [&](const Vec& w) { return sp.B_mod(a, w); });
  };
  const Vec xi_amb = cp.xi();
  const Vec ab = gi(y, z) * x - gi(x, z) * y;
  const Vec ee = gi(x, z) * eta(Y) * xi - gi(y, z) * eta(X) * xi;
  const Vec ot = sp.omega_sharp_tan();
  const double ef = std::exp(cp.f());

  r.add("eta_R", sign * eta(cp.geo().riemann(X, Y, Z)) * xi);
  r.add("B_mod", sign * 0.5 *
                     (sp.B_mod(y, z) * x - sp.B_mod(x, z) * y + gi(y, z) * bmod_sharp(x) - gi(x, z) * bmod_sharp(y) +
                      (cp.B(X, Z) * eta(Y) - cp.B(Y, Z) * eta(X) + cp.B(Y, xi_amb) * gi(x, z) -
                       cp.B(X, xi_amb) * gi(y, z)) *
                          xi));
  r.add("lee_norm_tan", sign * 0.25 * gi(ot, ot) * ab);
  r.add("lee_norm_eta", sign * 0.25 * cp.lee_norm_sq() * ee);
  r.add("unit", sign * (ab + ee));
  r.add("exp_f", sign * -ef * ab);

  const Vec fo = sp.f_nor(sp.omega_sharp_nor());
  r.correct("unit:1->exp(f)", sign * (ef - 1.0) * (ab + ee));
  r.correct("f_nor_lee", sign * 0.25 * dot(fo, fo) * ab);
  r.correct("f_nor_h",
            sign * -1.0 * detail::raise_functional(sp, [&](const Vec& w) { return detail::f_nor_terms(sp, x, y, z, w); }));
}

// R'(X,Y)Z = eta(R(X,Y)Z) xi + ...  (holds exactly when R-perp = 0).
inline Relation flat_normal_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z) {
  Relation r;
  r.lhs = sp.induced_riemann(x, y, z);
  add_flat_normal_groups(r, sp, x, y, z, 1.0);
  return r;
}

// -phi R-perp(X,Y) phi Z (tangential part) = R'(X,Y)Z - eta(R(X,Y)Z) xi - ...
inline Relation normal_curvature_phi_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z) {
  const ConformalPoint& cp = sp.ambient();
  const Vec pz = sp.nor_coords(cp.phi(sp.push(z)));
  Relation r;
  r.lhs = -1.0 * sp.t(sp.normal_curvature(x, y, pz));
  r.add("R_induced", sp.induced_riemann(x, y, z));
  add_flat_normal_groups(r, sp, x, y, z, -1.0);
  return r;
}

// ---------------------------------------------------------------------------
// CR submanifolds

// -g'(nabla'_Y Z, phi X) = g'(t h(X,Y), Z) - 1/2 g'(Y,Z) omega(phi X)  for
// X in D, Y, Z in D-perp (coordinate-constant probes).  The rederivation adds
// -e^{f/2} g'(Y,Z) eta(X), which vanishes for X orthogonal to xi.
inline Relation cr_leaf_relation(const SubmanifoldPoint& sp, const Vec& x, const Vec& y, const Vec& z) {
  const ConformalPoint& cp = sp.ambient();
  const Vec X = sp.push(x);
  Relation r = scalar_relation(-sp.gi(sp.induced_connection(y, z), sp.P(x)));
  r.add("t_h", Vec{sp.gi(sp.t(sp.h(x, y)), z)});
  r.add("lee", Vec{-0.5 * sp.gi(y, z) * cp.omega(cp.phi(X))});
  r.correct("sasaki_eta", Vec{-cp.exp_half_f() * sp.gi(y, z) * cp.eta(X)});
  return r;
}

}  // namespace consas
