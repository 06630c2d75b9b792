#pragma once

// A displayed identity LHS = sum of RHS groups, evaluated numerically.
//
// Each group keeps its label so a failing identity can be attributed to the
// group that deviates.  Known misprints are carried as separate correction
// groups: the printed defect ignores them, the corrected defect includes
// them, and the report shows both.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "consas/linalg.hpp"

namespace consas {

// Residuals at or below this absolute level count as zero.
inline constexpr double kAbsoluteFloor = 1e-12;

struct TermGroup {
  std::string label;
  Vec value;
};

struct Relation {
  Vec lhs;
  std::vector<TermGroup> rhs;
  std::vector<TermGroup> corrections;

  Relation& add(std::string label, Vec v) {
    rhs.push_back({std::move(label), std::move(v)});
    return *this;
  }
  Relation& correct(std::string label, Vec v) {
    corrections.push_back({std::move(label), std::move(v)});
    return *this;
  }

  Vec printed_defect() const {
    Vec d = lhs;
    for (const auto& t : rhs) d -= t.value;
    return d;
  }
  Vec corrected_defect() const {
    Vec d = printed_defect();
    for (const auto& t : corrections) d -= t.value;
    return d;
  }
  // Largest magnitude among the individual terms.
  double scale() const {
    double s = max_abs(lhs);
    for (const auto& t : rhs) s = std::max(s, max_abs(t.value));
    for (const auto& t : corrections) s = std::max(s, max_abs(t.value));
    return s;
  }
  bool has_corrections() const {
    for (const auto& t : corrections)
      if (max_abs(t.value) > 0.0) return true;
    return !corrections.empty();
  }
};

inline Relation scalar_relation(double lhs) { return Relation{Vec{lhs}, {}, {}}; }

// Relative residual: |defect| / (largest term), with an absolute floor.
inline double relative_residual(double abs_residual, double scale) {
  if (abs_residual <= kAbsoluteFloor) return 0.0;
  return abs_residual / std::max(scale, kAbsoluteFloor);
}

}  // namespace consas
