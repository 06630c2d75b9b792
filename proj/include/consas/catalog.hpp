#pragma once

// Immersion catalog for the Sasakian models.  Ambient coordinates are
// (x_1..x_n, y_1..y_n, z); every entry lies in {y = 0} except the invariant
// inclusions, which keep y_1..y_k.
//
//   invariant_<k>_in_<n>  (x_1..x_k, y_1..y_k, z) -> same coordinates, rest 0.
//                         k = n is the ambient space in itself (codim 0).
//   anti_xaxis_r3         t -> (t, 0, 0).  At y = 0: eta(d_x) = 0, phi d_x = -d_y
//                         and g(d_y, d_x) = g(d_y, d_z) = 0, so the curve is
//                         anti-invariant with xi normal.
//   anti_y0_plane_r3      (u, v) -> (u, 0, v).  phi d_x = -d_y is normal,
//                         phi d_z = 0; xi tangent, codim 1.
//   anti_surface_r5       (u, v) -> (u, kappa u^2 / 2, 0, 0, v), kappa = 0.5 by
//                         default.  phi maps the tangent plane into span{d_y},
//                         which is normal along y = 0; xi tangent, curved in x.
//   cr_r5                 (x1, x2, y1, z), y2 = 0.  D = span{d_x1, d_y1, d_z},
//                         D-perp = span{d_x2}.
//   cr_r7                 (x1, x2, x3, y1, z), y2 = y3 = 0.  D as above,
//                         D-perp = span{d_x2, d_x3}; spanned for bracket checks
//                         by Y = d_x2 + x2 d_x3 and Z = d_x3 + x1 d_x2, whose
//                         bracket is -x1 d_x3.
//
// CR distributions are constant spans in the source chart.

#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "consas/spaces.hpp"
#include "consas/submanifold.hpp"

namespace consas {

enum class SubmanifoldClass { invariant, anti_invariant, cr };

struct CatalogImmersion {
  Immersion immersion;
  SubmanifoldClass klass = SubmanifoldClass::invariant;
  int ambient_n = 1;  // ambient is the Sasakian model on R^{2n+1}
  bool xi_tangent = true;
  std::vector<Vec> D, D_perp;                 // CR only: constant source spans
  std::vector<VectorField> D_perp_fields;     // CR only: position-dependent spanning fields
};

inline const std::vector<std::string>& immersion_ids() {
  static const std::vector<std::string> ids = {"invariant_k_in_n", "anti_xaxis_r3", "anti_y0_plane_r3",
                                               "anti_surface_r5",  "cr_r5",         "cr_r7"};
  return ids;
}

namespace detail {

inline Vec unit(int m, int i) { return basis_vector(m, i); }

inline Immersion embed(std::string id, int m, int n_amb, std::vector<int> slots, double half_width = 1.0) {
  const int dim = 2 * n_amb + 1;
  Immersion imm;
  imm.id = std::move(id);
  imm.source_dim = m;
  imm.domain = Box::cube(m, half_width);
  imm.map = [slots, dim](std::span<const Jet> s) {
    JetVec x(dim, s[0].constant_like(0.0));
    for (std::size_t i = 0; i < slots.size(); ++i) x[slots[i]] = s[i];
    return x;
  };
  return imm;
}

}  // namespace detail

// Build a catalog entry.  `id` may carry parameters ("anti_surface_r5:kappa=0.5").
inline CatalogImmersion immersion_catalog(const std::string& id) {
  const ParsedId pid = parse_id(id);
  CatalogImmersion c;
  std::smatch mt;
  static const std::regex inv_re("invariant_([0-9]+)_in_([0-9]+)");
  if (std::regex_match(pid.name, mt, inv_re)) {
    const int k = std::stoi(mt[1]), n = std::stoi(mt[2]);
    if (k < 1 || k > n || n > 3) throw ConfigError("invariant_k_in_n needs 1 <= k <= n <= 3");
    std::vector<int> slots;
    for (int i = 0; i < k; ++i) slots.push_back(x_index(n, i));
    for (int i = 0; i < k; ++i) slots.push_back(y_index(n, i));
    slots.push_back(z_index(n));
    c.immersion = detail::embed(id, 2 * k + 1, n, slots);
    c.klass = SubmanifoldClass::invariant;
    c.ambient_n = n;
    return c;
  }
  if (pid.name == "anti_xaxis_r3") {
    c.immersion = detail::embed(id, 1, 1, {x_index(1, 0)});
    c.klass = SubmanifoldClass::anti_invariant;
    c.xi_tangent = false;
    return c;
  }
  if (pid.name == "anti_y0_plane_r3") {
    c.immersion = detail::embed(id, 2, 1, {x_index(1, 0), z_index(1)});
    c.klass = SubmanifoldClass::anti_invariant;
    return c;
  }
  if (pid.name == "anti_surface_r5") {
    const double kappa = pid.get("kappa", 0.5);
    Immersion imm;
    imm.id = id;
    imm.source_dim = 2;
    imm.domain = Box::cube(2, 1.0);
    imm.map = [kappa](std::span<const Jet> s) {
      JetVec x(5, s[0].constant_like(0.0));
      x[x_index(2, 0)] = s[0];
      x[x_index(2, 1)] = (0.5 * kappa) * s[0] * s[0];
      x[z_index(2)] = s[1];
      return x;
    };
    c.immersion = std::move(imm);
    c.klass = SubmanifoldClass::anti_invariant;
    c.ambient_n = 2;
    return c;
  }
  if (pid.name == "cr_r5") {
    // source (x1, x2, y1, z)
    c.immersion = detail::embed(id, 4, 2, {x_index(2, 0), x_index(2, 1), y_index(2, 0), z_index(2)});
    c.klass = SubmanifoldClass::cr;
    c.ambient_n = 2;
    c.D = {detail::unit(4, 0), detail::unit(4, 2), detail::unit(4, 3)};
    c.D_perp = {detail::unit(4, 1)};
    c.D_perp_fields = {constant_field(detail::unit(4, 1))};
    return c;
  }
  if (pid.name == "cr_r7") {
    // source (x1, x2, x3, y1, z)
    c.immersion =
        detail::embed(id, 5, 3, {x_index(3, 0), x_index(3, 1), x_index(3, 2), y_index(3, 0), z_index(3)});
    c.klass = SubmanifoldClass::cr;
    c.ambient_n = 3;
    c.D = {detail::unit(5, 0), detail::unit(5, 3), detail::unit(5, 4)};
    c.D_perp = {detail::unit(5, 1), detail::unit(5, 2)};
    c.D_perp_fields = {
        [](std::span<const Jet> s) {
          JetVec v(5, s[0].constant_like(0.0));
          v[1] = s[0].constant_like(1.0);
          v[2] = s[1];
          return v;
        },
        [](std::span<const Jet> s) {
          JetVec v(5, s[0].constant_like(0.0));
          v[2] = s[0].constant_like(1.0);
          v[1] = s[0];
          return v;
        }};
    return c;
  }
  throw ConfigError("unknown immersion '" + pid.name + "'");
}

// Sasakian model dimension parameter n of a space id.
inline int model_n(const std::string& model_id) {
  const ParsedId model = parse_id(model_id);
  return static_cast<int>(model.get("n", 1.0));
}

}  // namespace consas
