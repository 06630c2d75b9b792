#include <gtest/gtest.h>

#include "support.hpp"

using namespace consas;
using namespace testing_support;

TEST(Contact, ModelsAreAlmostContactMetric) {
  Rng rng(21);
  for (int n = 1; n <= 3; ++n) {
    const auto model = sasakian_model(n);
    for (int s = 0; s < 32; ++s) {
      const auto r = verify_almost_contact(model, model.chart.domain.sample(rng));
      EXPECT_LE(r.max(), 1e-12) << "n=" << n;
      EXPECT_LE(r.eta_xi, 1e-12);
    }
  }
}

TEST(Contact, ScaledPhiIsDetected) {
  const auto bad = perturbed_model(sasakian_model(1), 1.1, 0.0);
  const auto r = verify_almost_contact(bad, {0.2, -0.3, 0.1});
  EXPECT_GT(r.phi_square, 0.1);
  EXPECT_LE(r.eta_xi, 1e-12);
}

TEST(Contact, FundamentalTwoFormIsSkewAndKillsXi) {
  Rng rng(23);
  const auto model = sasakian_model(2);
  for (int s = 0; s < 32; ++s) {
    const StructureAtPoint st(model, model.chart.domain.sample(rng));
    const Vec x = random_vec(rng, 5), y = random_vec(rng, 5);
    EXPECT_LE(std::abs(st.Phi(x, x)), 1e-10);
    EXPECT_LE(std::abs(st.Phi(x, y) + st.Phi(y, x)), 1e-10);
    EXPECT_LE(std::abs(st.Phi(st.xi(), y)), 1e-10);
    EXPECT_LE(std::abs(st.Phi(y, st.xi())), 1e-10);
  }
}

TEST(Contact, ModelsAreSasakian) {
  Rng rng(25);
  for (int n = 1; n <= 3; ++n) {
    const auto model = sasakian_model(n);
    for (int s = 0; s < 32; ++s) {
      const StructureAtPoint st(model, model.chart.domain.sample(rng));
      const Vec x = random_vec(rng, 2 * n + 1), y = random_vec(rng, 2 * n + 1);
      EXPECT_LE(max_abs(sasakian_defect(st, x, y)), 1e-9);
      EXPECT_LE(max_abs(sasakian_defect(st, st.xi(), st.xi())), 1e-9);
      EXPECT_LE(max_abs(nijenhuis_normality_defect(st, x, y)), 1e-8);
    }
  }
}

TEST(Contact, NijenhuisTwoPathsAgree) {
  Rng rng(27);
  const auto model = sasakian_model(2);
  for (int s = 0; s < 8; ++s) {
    const Point p = model.chart.domain.sample(rng);
    const StructureAtPoint st(model, p);
    const Vec x = random_vec(rng, 5), y = random_vec(rng, 5);
    EXPECT_LE(max_abs(nijenhuis_torsion(st, x, y) - nijenhuis_torsion_fields(model, p, x, y)), 1e-10);
    const Vec e0 = basis_vector(5, 0), e1 = basis_vector(5, 3);
    EXPECT_LE(max_abs(nijenhuis_torsion(st, e0, e1) - nijenhuis_torsion_fields(model, p, e0, e1)), 1e-10);
  }
}

TEST(Contact, ContactFormConvention) {
  // d eta = Phi with d eta = half the Palais sum
  Rng rng(29);
  for (int n = 1; n <= 3; ++n) {
    const auto model = sasakian_model(n);
    for (int s = 0; s < 16; ++s) {
      const Point p = model.chart.domain.sample(rng);
      const Vec x = random_vec(rng, 2 * n + 1), y = random_vec(rng, 2 * n + 1);
      const double deta = kDetaNormalisation * exterior_derivative_1form(model.eta, p, x, y);
      EXPECT_NEAR(deta, fundamental_two_form(model, p, x, y), 1e-9);
    }
  }
}

TEST(Contact, PhiSectionalCurvatureIsMinusThree) {
  Rng rng(31);
  for (int n = 1; n <= 3; ++n) {
    const auto model = sasakian_model(n);
    for (int s = 0; s < 16; ++s) {
      const StructureAtPoint st(model, model.chart.domain.sample(rng));
      Vec x = random_vec(rng, 2 * n + 1);
      x = x - st.eta(x) * st.xi();
      x = (1.0 / std::sqrt(st.g(x, x))) * x;
      const Vec px = st.phi(x);
      EXPECT_NEAR(st.geometry().curvature_4(x, px, px, x), -3.0, 1e-6);
    }
  }
}

TEST(Contact, FlatConstantStructureIsNormal) {
  // phi constant, eta exact: [phi,phi] = 0 and d eta = 0
  AlmostContactStructure s;
  s.chart = euclidean_chart(3);
  s.phi = [](std::span<const Jet> x) {
    Matrix<Jet> m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = x[0].constant_like(0.0);
    m(0, 1) = x[0].constant_like(-1.0);
    m(1, 0) = x[0].constant_like(1.0);
    return m;
  };
  s.xi = constant_field({0, 0, 1});
  s.eta = constant_field({0, 0, 1});
  Rng rng(33);
  for (int k = 0; k < 8; ++k) {
    const Point p = s.chart.domain.sample(rng);
    EXPECT_LE(verify_almost_contact(s, p).max(), 1e-14);
    EXPECT_LE(max_abs(nijenhuis_normality_defect(s, p, random_vec(rng, 3), random_vec(rng, 3))), 1e-14);
  }
}
