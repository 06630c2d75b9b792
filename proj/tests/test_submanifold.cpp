#include <gtest/gtest.h>
#include <functional>
#include <string>

#include "support.hpp"

using namespace consas;
using namespace testing_support;

namespace {

// (u) -> (u, sqrt(1 - u^2)), upper unit circle
Immersion circle() {
  Immersion imm;
  imm.id = "circle";
  imm.source_dim = 1;
  imm.domain = Box::cube(1, 0.6);
  imm.map = [](std::span<const Jet> s) { return JetVec{s[0], sqrt(1.0 - s[0] * s[0])}; };
  return imm;
}

// (u, v) -> (u, v, sqrt(1 - u^2 - v^2)), upper unit hemisphere
Immersion hemisphere() {
  Immersion imm;
  imm.id = "hemisphere";
  imm.source_dim = 2;
  imm.domain = Box::cube(2, 0.5);
  imm.map = [](std::span<const Jet> s) { return JetVec{s[0], s[1], sqrt(1.0 - s[0] * s[0] - s[1] * s[1])}; };
  return imm;
}

// coordinate plane x3 = x4 = 0 in R^4
Immersion plane() {
  Immersion imm;
  imm.id = "plane";
  imm.source_dim = 2;
  imm.domain = Box::cube(2, 1.0);
  imm.map = [](std::span<const Jet> s) { return JetVec{s[0], s[1], s[0].constant_like(0), s[0].constant_like(0)}; };
  return imm;
}

Vec unit_first(const SubmanifoldPoint& sp) {
  const Vec e = basis_vector(sp.dim(), 0);
  return (1.0 / std::sqrt(sp.gi(e, e))) * e;
}

}  // namespace

TEST(Submanifold, FlatSubspaceIsTotallyGeodesic) {
  const auto space = euclidean_space(4);
  const auto imm = plane();
  const SubmanifoldPoint sp(space, imm, {0.3, -0.4}, default_frame(space, imm));
  Rng rng(61);
  const Vec u = random_vec(rng, 2), v = random_vec(rng, 2);
  EXPECT_LE(max_abs(sp.h(u, v)), 1e-14);
  EXPECT_LE(max_abs(sp.A(0, u)), 1e-14);
  EXPECT_LE(max_abs(sp.mean_curvature()), 1e-14);
  // the normal frame is the remaining coordinate axes
  for (int a = 0; a < 2; ++a) {
    EXPECT_NEAR(std::abs(sp.normal(a)[2 + a]) + std::abs(sp.normal(a)[3 - a]), 1.0, 1e-14);
    EXPECT_NEAR(sp.normal(a)[0], 0.0, 1e-14);
    EXPECT_NEAR(sp.normal(a)[1], 0.0, 1e-14);
  }
}

TEST(Submanifold, CircleCurvature) {
  const auto space = euclidean_space(2);
  const auto imm = circle();
  Rng rng(63);
  for (int s = 0; s < 8; ++s) {
    const SubmanifoldPoint sp(space, imm, imm.domain.sample(rng), default_frame(space, imm));
    const Vec x = unit_first(sp);
    const Vec pos = sp.ambient_point();
    // curvature vector of the unit circle is -position
    EXPECT_LE(max_abs(sp.h_ambient(x, x) + pos), 1e-9);
    EXPECT_NEAR(std::sqrt(dot(sp.mean_curvature(), sp.mean_curvature())), 1.0, 1e-9);
  }
}

TEST(Submanifold, SphereShapeOperator) {
  const auto space = euclidean_space(3);
  const auto imm = hemisphere();
  Rng rng(65);
  for (int s = 0; s < 8; ++s) {
    const SubmanifoldPoint sp(space, imm, imm.domain.sample(rng), default_frame(space, imm));
    // outward normal gives A = -Id; the sign follows the frame's orientation
    const double orient = dot(sp.normal(0), sp.ambient_point());
    EXPECT_NEAR(std::abs(orient), 1.0, 1e-12);
    const auto a = sp.A_matrix(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_NEAR(a(i, j), i == j ? -orient : 0.0, 1e-9);
  }
}

TEST(Submanifold, WeingartenDualityAndSymmetry) {
  for (const char* id : {"invariant_1_in_2", "anti_xaxis_r3", "anti_surface_r5", "cr_r7"}) {
    const auto entry = immersion_catalog(id);
    const auto space = conformal_space("sasakian:n=" + std::to_string(entry.ambient_n), "quad:c=0.2");
    const auto frame = default_frame(space, entry.immersion);
    Rng rng(std::hash<std::string>{}(id));
    for (int s = 0; s < 8; ++s) {
      const SubmanifoldPoint sp(space, entry.immersion, entry.immersion.domain.sample(rng), frame);
      const Vec u = random_vec(rng, sp.dim()), v = random_vec(rng, sp.dim());
      EXPECT_LE(max_abs(sp.h(u, v) - sp.h(v, u)), 1e-9) << id;
      for (int a = 0; a < sp.codim(); ++a) EXPECT_NEAR(sp.gi(sp.A(a, u), v), sp.h(u, v)[a], 1e-9) << id;
      const auto S = sp.S(u), S2 = sp.S_from_christoffel(u);
      for (int a = 0; a < sp.codim(); ++a)
        for (int b = 0; b < sp.codim(); ++b) {
          EXPECT_NEAR(S(a, b), -S(b, a), 1e-9) << id;
          EXPECT_NEAR(S(a, b), S2(a, b), 1e-9) << id;
        }
      const auto R = sp.normal_curvature(u, v), Rs = sp.normal_curvature(v, u);
      for (int a = 0; a < sp.codim(); ++a)
        for (int b = 0; b < sp.codim(); ++b) EXPECT_NEAR(R(a, b), -Rs(a, b), 1e-10) << id;
    }
  }
}

TEST(Submanifold, XAxisNormalFrame) {
  const auto space = conformal_space("sasakian:n=1", "const:c=0");
  const auto entry = immersion_catalog("anti_xaxis_r3");
  const SubmanifoldPoint sp(space, entry.immersion, {0.0}, default_frame(space, entry.immersion));
  ASSERT_EQ(sp.codim(), 2);
  for (int a = 0; a < 2; ++a) {
    EXPECT_NEAR(sp.g(sp.normal(a), sp.push({1.0})), 0.0, 1e-12);
    for (int b = 0; b < 2; ++b) EXPECT_NEAR(sp.g(sp.normal(a), sp.normal(b)), a == b ? 1.0 : 0.0, 1e-12);
    EXPECT_NEAR(sp.normal(a)[0], 0.0, 1e-12);  // spans the (d_y, d_z) plane
  }
}

TEST(Submanifold, CodimensionOneHasFlatNormalBundle) {
  const auto entry = immersion_catalog("anti_y0_plane_r3");
  const auto space = conformal_space("sasakian:n=1", "linear_z:a=0.3");
  const SubmanifoldPoint sp(space, entry.immersion, {0.2, -0.1}, default_frame(space, entry.immersion));
  ASSERT_EQ(sp.codim(), 1);
  EXPECT_LE(std::abs(sp.S({1.0, 0.5})(0, 0)), 1e-12);
  EXPECT_LE(std::abs(sp.normal_curvature({1.0, 0.0}, {0.0, 1.0})(0, 0)), 1e-12);
}

TEST(Submanifold, MeanCurvatureIsFrameIndependent) {
  const auto entry = immersion_catalog("anti_surface_r5");
  const auto space = conformal_space("sasakian:n=2", "linear_z:a=0.3");
  auto frame = default_frame(space, entry.immersion);
  const Point src{0.3, -0.2};
  const SubmanifoldPoint a(space, entry.immersion, src, frame);
  const double c = std::cos(0.8), s = std::sin(0.8);
  Matrix<double> rot = Matrix<double>::identity(3);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  frame.rotation = rot;
  const SubmanifoldPoint b(space, entry.immersion, src, frame);
  EXPECT_GT(max_abs(a.normal(0) - b.normal(0)), 0.1);
  EXPECT_LE(max_abs(a.normal_vector(a.mean_curvature()) - b.normal_vector(b.mean_curvature())), 1e-10);
}

TEST(Submanifold, StructureEquationsDegenerateFactor) {
  // f constant, ambient Sasakian: classical structure equations
  for (const char* id : {"invariant_1_in_2", "anti_surface_r5"}) {
    const auto entry = immersion_catalog(id);
    const auto space = conformal_space("sasakian:n=2", "const:c=0");
    const auto frame = default_frame(space, entry.immersion);
    Rng rng(67);
    for (int s = 0; s < 8; ++s) {
      const SubmanifoldPoint sp(space, entry.immersion, entry.immersion.domain.sample(rng), frame);
      const Vec u = random_vec(rng, sp.dim()), v = random_vec(rng, sp.dim()), c = random_vec(rng, sp.codim());
      for (const Relation& r : {structure_P_relation(sp, u, v), structure_F_relation(sp, u, v),
                                structure_t_relation(sp, u, c), structure_f_relation(sp, u, c)})
        EXPECT_LE(max_abs(r.corrected_defect()), 1e-8) << id;
    }
  }
}

TEST(Submanifold, Classification) {
  const auto space3 = conformal_space("sasakian:n=1", "const:c=0");
  const auto space5 = conformal_space("sasakian:n=2", "const:c=0");
  const auto inv = classify(space5, immersion_catalog("invariant_1_in_2").immersion, 8);
  EXPECT_TRUE(inv.invariant);
  EXPECT_FALSE(inv.anti_invariant);
  EXPECT_TRUE(inv.xi_tangent);
  EXPECT_LE(inv.max_F, 1e-10);
  const auto ax = classify(space3, immersion_catalog("anti_xaxis_r3").immersion, 8);
  EXPECT_TRUE(ax.anti_invariant);
  EXPECT_TRUE(ax.xi_normal);
  EXPECT_LE(ax.max_P, 1e-10);
  const auto self = classify(space3, immersion_catalog("invariant_1_in_1").immersion, 4);
  EXPECT_TRUE(self.invariant);
  EXPECT_EQ(self.max_F, 0.0);
}

TEST(Submanifold, AmbientInItselfHasNoSecondFundamentalForm) {
  const auto entry = immersion_catalog("invariant_2_in_2");
  const auto space = conformal_space("sasakian:n=2", "quad:c=0.1");
  const SubmanifoldPoint sp(space, entry.immersion, {0.1, 0.2, -0.3, 0.4, 0.5}, default_frame(space, entry.immersion));
  EXPECT_EQ(sp.codim(), 0);
  EXPECT_TRUE(sp.h({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}).empty());
}
