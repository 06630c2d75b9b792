#pragma once

// Catalog of model spaces.
//
// Sasakian model on R^{2n+1}, coordinates ordered (x_1..x_n, y_1..y_n, z):
//   eta~ = 1/2 (dz - sum y_i dx_i),   xi~ = 2 d/dz,
//   g~   = eta~ (x) eta~ + 1/4 sum (dx_i^2 + dy_i^2),
//   phi(X^i d_xi + Y^i d_yi + Z d_z) = Y^i d_xi - X^i d_yi + y_i Y^i d_z.
// Its phi-sectional curvature is -3.
//
// Conformal factor families:
//   const:c=..          f = c
//   linear_z:a=..       f = a z
//   quad:c=..           f = c |x|^2 (all coordinates)
//   affine:x1=..,z=..   f = sum of coefficient * coordinate

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "consas/conformal.hpp"

namespace consas {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kModelHalfWidth = 1.0;

inline int x_index(int /*n*/, int i) { return i; }
inline int y_index(int n, int i) { return n + i; }
inline int z_index(int n) { return 2 * n; }

inline AlmostContactStructure sasakian_model(int n) {
  if (n < 1 || n > 3) throw ConfigError("sasakian_model: n must be 1, 2 or 3");
  const int dim = 2 * n + 1;
  AlmostContactStructure s;
  s.chart.dim = dim;
  s.chart.domain = Box::cube(dim, kModelHalfWidth);
  auto eta_components = [n, dim](std::span<const Jet> x) {
    JetVec e(dim, x[0].constant_like(0.0));
    for (int i = 0; i < n; ++i) e[x_index(n, i)] = -0.5 * x[y_index(n, i)];
    e[z_index(n)] = x[0].constant_like(0.5);
    return e;
  };
  s.eta = eta_components;
  s.xi = [n, dim](std::span<const Jet> x) {
    JetVec v(dim, x[0].constant_like(0.0));
    v[z_index(n)] = x[0].constant_like(2.0);
    return v;
  };
  s.chart.metric = [n, dim, eta_components](std::span<const Jet> x) {
    const JetVec e = eta_components(x);
    Matrix<Jet> g(dim, dim, x[0].constant_like(0.0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = e[i] * e[j];
    for (int i = 0; i < 2 * n; ++i) g(i, i) += 0.25;
    return g;
  };
  s.phi = [n, dim](std::span<const Jet> x) {
    Matrix<Jet> m(dim, dim, x[0].constant_like(0.0));
    for (int i = 0; i < n; ++i) {
      m(x_index(n, i), y_index(n, i)) = x[0].constant_like(1.0);
      m(y_index(n, i), x_index(n, i)) = x[0].constant_like(-1.0);
      m(z_index(n), y_index(n, i)) = x[y_index(n, i)];
    }
    return m;
  };
  return s;
}

// "name:k=v,k=v" -> (name, {k: v})
struct ParsedId {
  std::string name;
  std::map<std::string, double> params;

  double get(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

inline ParsedId parse_id(const std::string& text) {
  ParsedId out;
  const auto colon = text.find(':');
  out.name = text.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("malformed parameter '" + item + "' in '" + text + "'");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out.params[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("non-numeric parameter '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

// Coordinate names of the model chart: x1..xn, y1..yn, z.
inline int coordinate_index(int n, const std::string& name) {
  if (name == "z") return z_index(n);
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
    const int i = std::stoi(name.substr(1)) - 1;
    if (i >= 0 && i < n) return name[0] == 'x' ? x_index(n, i) : y_index(n, i);
  }
  throw ConfigError("unknown coordinate '" + name + "'");
}

inline ScalarField conformal_factor(int n, const std::string& spec) {
  const ParsedId id = parse_id(spec);
  const int dim = 2 * n + 1;
  if (id.name == "const") {
    const double c = id.get("c", 0.0);
    return [c](std::span<const Jet> x) { return x[0].constant_like(c); };
  }
  if (id.name == "linear_z") {
    const double a = id.get("a", 0.3);
    const int zi = z_index(n);
    return [a, zi](std::span<const Jet> x) { return a * x[zi]; };
  }
  if (id.name == "quad") {
    const double c = id.get("c", 0.1);
    return [c, dim](std::span<const Jet> x) {
      Jet s = x[0].constant_like(0.0);
      for (int i = 0; i < dim; ++i) s += x[i] * x[i];
      return c * s;
    };
  }
  if (id.name == "affine") {
    std::vector<std::pair<int, double>> terms;
    for (const auto& [name, coef] : id.params) terms.emplace_back(coordinate_index(n, name), coef);
    return [terms](std::span<const Jet> x) {
      Jet s = x[0].constant_like(0.0);
      for (const auto& [i, c] : terms) s += c * x[i];
      return s;
    };
  }
  throw ConfigError("unknown factor '" + id.name + "'");
}

// Deliberate corruptions of a model, used to show the checks are not vacuous:
// phi_scale multiplies phi, g_perturb adds g_perturb * dx1^2 to the metric.
inline AlmostContactStructure perturbed_model(AlmostContactStructure s, double phi_scale, double g_perturb) {
  if (phi_scale != 1.0)
    s.phi = [phi = s.phi, phi_scale](std::span<const Jet> x) {
      return phi(x).map([phi_scale](const Jet& e) { return phi_scale * e; });
    };
  if (g_perturb != 0.0)
    s.chart.metric = [metric = s.chart.metric, g_perturb](std::span<const Jet> x) {
      Matrix<Jet> g = metric(x);
      g(0, 0) += x[0].constant_like(g_perturb);
      return g;
    };
  return s;
}

// space id "sasakian:n=2" + factor id "linear_z:a=0.3"
inline ConformalSasakianSpace conformal_space(const std::string& model_id, const std::string& factor_id) {
  const ParsedId model = parse_id(model_id);
  if (model.name != "sasakian") throw ConfigError("unknown space '" + model.name + "'");
  for (const auto& [key, value] : model.params)
    if (key != "n" && key != "phi_scale" && key != "g_perturb")
      throw ConfigError("unknown space parameter '" + key + "'");
  const double nd = model.get("n", 1.0);
  const int n = static_cast<int>(nd);
  if (nd != n || n < 1 || n > 3) throw ConfigError("sasakian: n must be 1, 2 or 3");
  AlmostContactStructure tilde =
      perturbed_model(sasakian_model(n), model.get("phi_scale", 1.0), model.get("g_perturb", 0.0));
  return make_conformal_space(model_id + "/" + factor_id, std::move(tilde), conformal_factor(n, factor_id));
}

}  // namespace consas
