#pragma once

#include <cmath>

#include "consas/catalog.hpp"

namespace testing_support {

using namespace consas;

inline Jet jsin(const Jet& x) {
  const double v = x.value();
  return x.apply({std::sin(v), std::cos(v), -std::sin(v), -std::cos(v)});
}
inline Jet jcos(const Jet& x) {
  const double v = x.value();
  return x.apply({std::cos(v), -std::sin(v), -std::cos(v), std::sin(v)});
}

inline Vec random_vec(Rng& rng, int n) {
  Vec v(n);
  for (double& c : v) c = uniform(rng, -1.0, 1.0);
  return v;
}

inline MetricChart euclidean_chart(int n, double half_width = 2.0) {
  MetricChart c;
  c.dim = n;
  c.domain = Box::cube(n, half_width);
  c.metric = [n](std::span<const Jet> x) {
    Matrix<Jet> g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = x[0].constant_like(i == j ? 1.0 : 0.0);
    return g;
  };
  return c;
}

// Flat space with a trivial (zero) structure and f = 0: lets the submanifold
// machinery run on classical curves and surfaces.
inline ConformalSasakianSpace euclidean_space(int n) {
  AlmostContactStructure s;
  s.chart = euclidean_chart(n);
  s.phi = [n](std::span<const Jet> x) {
    Matrix<Jet> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = x[0].constant_like(0.0);
    return m;
  };
  s.xi = [n](std::span<const Jet> x) { return JetVec(n, x[0].constant_like(0.0)); };
  s.eta = s.xi;
  return make_conformal_space("euclidean", s, [](std::span<const Jet> x) { return x[0].constant_like(0.0); });
}

inline NormalFrameChoice default_frame(const ConformalSasakianSpace& space, const Immersion& imm) {
  return NormalFrameChoice{choose_normal_candidates(space, imm), std::nullopt};
}

}  // namespace testing_support
