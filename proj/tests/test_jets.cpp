#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "consas/jet.hpp"

using namespace consas;

namespace {

// f(x, y, z) = exp(x y) / (1 + z^2) + sqrt(2 + x) * y^3
template <typename T>
T sample_fn(const T& x, const T& y, const T& z) {
  using std::exp;
  using std::sqrt;
  return exp(x * y) / (1.0 + z * z) + sqrt(2.0 + x) * y * y * y;
}

double fd_partial(const std::vector<double>& p, int i, double h = 1e-5) {
  auto f = [](std::vector<double> q) { return sample_fn(q[0], q[1], q[2]); };
  auto a = p, b = p;
  a[i] += h;
  b[i] -= h;
  return (f(a) - f(b)) / (2 * h);
}

double fd_second(const std::vector<double>& p, int i, int j, double h = 1e-4) {
  auto f = [](std::vector<double> q) { return sample_fn(q[0], q[1], q[2]); };
  auto at = [&](double si, double sj) {
    auto q = p;
    q[i] += si * h;
    q[j] += sj * h;
    return f(q);
  };
  return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
}

}  // namespace

TEST(Jets, LiftCoordinate) {
  const std::vector<double> p{0.3, -1.2, 2.0};
  const Jet x = Jet::variable(1, p, 3);
  EXPECT_EQ(x.value(), -1.2);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(x.d(i), i == 1 ? 1.0 : 0.0);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(x.d(i, j), 0.0);
      for (int k = 0; k < 3; ++k) EXPECT_EQ(x.d(i, j, k), 0.0);
    }
  }
  EXPECT_THROW(Jet::variable(3, p, 2), JetError);
  EXPECT_THROW(Jet::variable(0, p, 4), JetError);
}

TEST(Jets, MatchesFiniteDifferences) {
  const std::vector<double> p{0.4, 0.7, -0.3};
  const auto x = lift_point(p, 3);
  const Jet f = sample_fn(x[0], x[1], x[2]);
  EXPECT_NEAR(f.value(), sample_fn(p[0], p[1], p[2]), 1e-14);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(f.d(i), fd_partial(p, i), 1e-8);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(f.d(i, j), fd_second(p, i, j), 1e-6);
  }
}

TEST(Jets, ThirdOrderAgainstClosedForm) {
  // x^2 y z: d_xyz = 2x, d_xxy = 2z, d_xxz = 2y
  const std::vector<double> p{1.5, -0.5, 2.0};
  const auto x = lift_point(p, 3);
  const Jet f = x[0] * x[0] * x[1] * x[2];
  EXPECT_NEAR(f.d(0, 1, 2), 2 * p[0], 1e-13);
  EXPECT_NEAR(f.d(0, 0, 1), 2 * p[2], 1e-13);
  EXPECT_NEAR(f.d(0, 0, 2), 2 * p[1], 1e-13);
  EXPECT_NEAR(f.d(1, 1, 1), 0.0, 1e-13);
}

TEST(Jets, BlocksAreSymmetric) {
  const std::vector<double> p{0.2, 0.9, 0.1};
  const auto x = lift_point(p, 3);
  const Jet f = sample_fn(x[0], x[1], x[2]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(f.d(i, j), f.d(j, i), 1e-13);
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(f.d(i, j, k), f.d(j, i, k), 1e-12);
        EXPECT_NEAR(f.d(i, j, k), f.d(k, j, i), 1e-12);
        EXPECT_NEAR(f.d(i, j, k), f.d(i, k, j), 1e-12);
      }
    }
}

TEST(Jets, OrderZeroIsPlainArithmetic) {
  const Jet a(1.25), b(-3.5);
  EXPECT_EQ((a * b + a / b - b).value(), 1.25 * -3.5 + 1.25 / -3.5 + 3.5);
  EXPECT_EQ(exp(a).value(), std::exp(1.25));
}

TEST(Jets, DerivativeLowersOrder) {
  const std::vector<double> p{0.3, 0.6, -0.2};
  const auto x = lift_point(p, 3);
  const Jet f = sample_fn(x[0], x[1], x[2]);
  const Jet fy = f.derivative(1);
  EXPECT_EQ(fy.order(), 2);
  EXPECT_NEAR(fy.value(), f.d(1), 1e-14);
  EXPECT_NEAR(fy.d(0, 2), f.d(1, 0, 2), 1e-14);
}

TEST(Jets, ComposeIsChainRule) {
  // outer(u, v) = u^2 exp(v) at u = 1 + t^3, v = t^2
  const std::vector<double> t{0.7};
  const auto tj = lift_point(t, 3);
  const Jet u = 1.0 + tj[0] * tj[0] * tj[0], v = tj[0] * tj[0];
  const std::vector<double> q{u.value(), v.value()};
  const auto uv = lift_point(q, 3);
  const Jet outer = uv[0] * uv[0] * exp(uv[1]);
  const std::vector<Jet> inner{u, v};
  const Jet composed = compose(outer, inner);
  const Jet direct = u * u * exp(v);
  EXPECT_NEAR(composed.value(), direct.value(), 1e-14);
  EXPECT_NEAR(composed.d(0), direct.d(0), 1e-13);
  EXPECT_NEAR(composed.d(0, 0), direct.d(0, 0), 1e-12);
  EXPECT_NEAR(composed.d(0, 0, 0), direct.d(0, 0, 0), 1e-12);
}
