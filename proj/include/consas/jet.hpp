#pragma once

// Truncated multivariate Taylor arithmetic ("jets") up to third order.
//
// A Jet carries the value of a scalar function at a base point together with
// all of its partial derivatives up to the jet's order, stored as dense
// symmetric blocks:
//
//   value, d_i, d_ij, d_ijk        (i, j, k < nvars)
//
// Arithmetic propagates the derivatives exactly (Leibniz / Faa di Bruno), so
// composing the elementary operations yields the derivatives of the composite
// function at the base point to rounding accuracy.
//
// A jet with nvars() == 0 is a plain scalar constant.  It broadcasts against
// any other jet, which keeps field definitions readable (`0.25 + a * b`).

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace consas {

class JetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Jet {
 public:
  static constexpr int kMaxOrder = 3;

  Jet() : coeffs_(1, 0.0) {}
  Jet(double value) : coeffs_(1, value) {}  // NOLINT(google-explicit-constructor)

  static Jet constant(int nvars, int order, double value,
                      std::shared_ptr<const std::vector<double>> base = nullptr) {
    check_shape(nvars, order);
    Jet j;
    j.nvars_ = nvars;
    j.order_ = order;
    j.base_ = std::move(base);
    j.coeffs_.assign(block_offset(nvars, order + 1), 0.0);
    j.coeffs_[0] = value;
    return j;
  }

  // Coordinate function x_index lifted at `point`.
  static Jet variable(std::size_t index, std::span<const double> point, int order,
                      std::shared_ptr<const std::vector<double>> base = nullptr) {
    if (index >= point.size()) {
      throw JetError("lift_coordinate: index " + std::to_string(index) +
                     " out of range for dimension " + std::to_string(point.size()));
    }
    if (!base) base = std::make_shared<const std::vector<double>>(point.begin(), point.end());
    Jet j = constant(static_cast<int>(point.size()), order, point[index], std::move(base));
    if (order >= 1) j.coeffs_[1 + index] = 1.0;
    return j;
  }

  // Constant with the same shape and base point as this jet.
  Jet constant_like(double value) const { return constant(nvars_, order_, value, base_); }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  bool is_scalar() const { return nvars_ == 0; }
  const std::shared_ptr<const std::vector<double>>& base_point() const { return base_; }

  double value() const { return coeffs_[0]; }
  double d(int i) const { return order_ >= 1 ? coeffs_[1 + i] : 0.0; }
  double d(int i, int j) const {
    return order_ >= 2 ? coeffs_[block_offset(nvars_, 2) + i * nvars_ + j] : 0.0;
  }
  double d(int i, int j, int k) const {
    return order_ >= 3 ? coeffs_[block_offset(nvars_, 3) + (i * nvars_ + j) * nvars_ + k] : 0.0;
  }

  // Partial derivative d/dx_i as a jet of one lower order.
  Jet derivative(int i) const {
    if (is_scalar()) return Jet(0.0);
    if (i < 0 || i >= nvars_) throw JetError("derivative: variable index out of range");
    if (order_ == 0) throw JetError("derivative: order-0 jet carries no derivative");
    Jet r = constant(nvars_, order_ - 1, d(i), base_);
    const int n = nvars_;
    if (r.order_ >= 1)
      for (int j = 0; j < n; ++j) r.coeffs_[1 + j] = d(i, j);
    if (r.order_ >= 2) {
      const std::size_t o2 = block_offset(n, 2);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) r.coeffs_[o2 + j * n + k] = d(i, j, k);
    }
    return r;
  }

  Jet truncated(int order) const {
    if (is_scalar() || order >= order_) return *this;
    Jet r = *this;
    r.order_ = order < 0 ? 0 : order;
    r.coeffs_.resize(block_offset(nvars_, r.order_ + 1));
    return r;
  }

  // Raw coefficient access for the block-wise kernels below.
  std::span<const double> coefficients() const { return coeffs_; }

  Jet operator-() const {
    Jet r = *this;
    for (double& c : r.coeffs_) c = -c;
    return r;
  }

  Jet& operator+=(const Jet& b) { return accumulate(b, 1.0); }
  Jet& operator-=(const Jet& b) { return accumulate(b, -1.0); }
  Jet& operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
  }
  Jet& operator*=(const Jet& b) {
    *this = *this * b;
    return *this;
  }
  Jet& operator/=(const Jet& b) {
    *this = *this / b;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, double s) {
    Jet r = a;
    return r *= s;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    if (a.is_scalar()) return b * a.value();
    if (b.is_scalar()) return a * b.value();
    check_compatible(a, b);
    const int n = a.nvars_;
    Jet r = constant(n, a.order_, a.value() * b.value(), a.base_);
    const double a0 = a.value(), b0 = b.value();
    const double* ac = a.coeffs_.data();
    const double* bc = b.coeffs_.data();
    double* rc = r.coeffs_.data();
    if (a.order_ >= 1) {
      for (int i = 0; i < n; ++i) rc[1 + i] = a0 * bc[1 + i] + ac[1 + i] * b0;
    }
    if (a.order_ >= 2) {
      const std::size_t o2 = block_offset(n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const std::size_t ij = o2 + i * n + j;
          rc[ij] = a0 * bc[ij] + ac[ij] * b0 + ac[1 + i] * bc[1 + j] + ac[1 + j] * bc[1 + i];
        }
    }
    if (a.order_ >= 3) {
      const std::size_t o2 = block_offset(n, 2);
      const std::size_t o3 = block_offset(n, 3);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const std::size_t ijk = o3 + (i * n + j) * n + k;
            rc[ijk] = a0 * bc[ijk] + ac[ijk] * b0 +
                      ac[o2 + i * n + j] * bc[1 + k] + ac[o2 + i * n + k] * bc[1 + j] +
                      ac[o2 + j * n + k] * bc[1 + i] + ac[1 + i] * bc[o2 + j * n + k] +
                      ac[1 + j] * bc[o2 + i * n + k] + ac[1 + k] * bc[o2 + i * n + j];
          }
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.is_scalar()) {
      if (b.value() == 0.0) throw JetError("jet division by zero value");
      return a * (1.0 / b.value());
    }
    return a * reciprocal(b);
  }

  static Jet reciprocal(const Jet& b) {
    const double x = b.value();
    if (x == 0.0) throw JetError("jet division by zero value");
    const double r = 1.0 / x;
    return b.apply({r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r});
  }

  // F(this) for a univariate F given its derivatives F, F', F'', F''' at value().
  Jet apply(const std::array<double, 4>& f) const {
    if (is_scalar()) return Jet(f[0]);
    const int n = nvars_;
    Jet r = constant(n, order_, f[0], base_);
    const double* ac = coeffs_.data();
    double* rc = r.coeffs_.data();
    if (order_ >= 1)
      for (int i = 0; i < n; ++i) rc[1 + i] = f[1] * ac[1 + i];
    const std::size_t o2 = block_offset(n, 2);
    if (order_ >= 2)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rc[o2 + i * n + j] = f[1] * ac[o2 + i * n + j] + f[2] * ac[1 + i] * ac[1 + j];
    if (order_ >= 3) {
      const std::size_t o3 = block_offset(n, 3);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            rc[o3 + (i * n + j) * n + k] =
                f[1] * ac[o3 + (i * n + j) * n + k] +
                f[2] * (ac[o2 + i * n + j] * ac[1 + k] + ac[o2 + i * n + k] * ac[1 + j] +
                        ac[o2 + j * n + k] * ac[1 + i]) +
                f[3] * ac[1 + i] * ac[1 + j] * ac[1 + k];
    }
    return r;
  }

 private:
  static std::size_t block_offset(int n, int block) {
    // Offset of the derivative block of the given order in the flat storage.
    std::size_t off = 0, size = 1;
    for (int b = 0; b < block; ++b) {
      off += size;
      size *= static_cast<std::size_t>(n);
    }
    return off;
  }

  static void check_shape(int nvars, int order) {
    if (nvars < 0) throw JetError("jet: negative variable count");
    if (order < 0 || order > kMaxOrder) throw JetError("jet: order must be in [0, 3]");
  }

  static void check_compatible(const Jet& a, const Jet& b) {
    if (a.nvars_ != b.nvars_ || a.order_ != b.order_)
      throw JetError("jet operands differ in variable count or order");
    if (a.base_ && b.base_ && a.base_ != b.base_ && *a.base_ != *b.base_)
      throw JetError("jet operands expanded at different base points");
  }

  Jet& accumulate(const Jet& b, double sign) {
    if (b.is_scalar()) {
      coeffs_[0] += sign * b.value();
      return *this;
    }
    if (is_scalar()) {
      const double v = value();
      *this = b * sign;
      coeffs_[0] += v;
      return *this;
    }
    check_compatible(*this, b);
    if (!base_) base_ = b.base_;
    for (std::size_t c = 0; c < coeffs_.size(); ++c) coeffs_[c] += sign * b.coeffs_[c];
    return *this;
  }

  int nvars_ = 0;
  int order_ = 0;
  std::shared_ptr<const std::vector<double>> base_;
  std::vector<double> coeffs_;
};

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  return a.apply({e, e, e, e});
}

inline Jet sqrt(const Jet& a) {
  const double x = a.value();
  if (!(x > 0.0)) throw JetError("jet sqrt of non-positive value");
  const double s = std::sqrt(x);
  return a.apply({s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)});
}

inline Jet pow(const Jet& a, double p) {
  const double x = a.value();
  if (!(x > 0.0) && p != std::floor(p)) throw JetError("jet pow of non-positive base");
  return a.apply({std::pow(x, p), p * std::pow(x, p - 1), p * (p - 1) * std::pow(x, p - 2),
                  p * (p - 1) * (p - 2) * std::pow(x, p - 3)});
}

// Lift every coordinate of `point` as an order-`order` jet sharing one base point.
inline std::vector<Jet> lift_point(std::span<const double> point, int order) {
  auto base = std::make_shared<const std::vector<double>>(point.begin(), point.end());
  std::vector<Jet> x;
  x.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) x.push_back(Jet::variable(i, point, order, base));
  return x;
}

inline std::vector<double> values(std::span<const Jet> jets) {
  std::vector<double> v;
  v.reserve(jets.size());
  for (const Jet& j : jets) v.push_back(j.value());
  return v;
}

// Substitute `inner` (jets in some other variables, one per variable of
// `outer`) into the Taylor polynomial of `outer`.  The inner values must
// coincide with outer's base point; the result has order
// min(outer.order(), inner order).
inline Jet compose(const Jet& outer, std::span<const Jet> inner) {
  if (outer.is_scalar()) return outer;
  const int n = outer.nvars();
  if (static_cast<int>(inner.size()) != n) throw JetError("compose: inner size mismatch");
  int order = outer.order();
  for (const Jet& in : inner) order = std::min(order, in.is_scalar() ? 0 : in.order());
  if (outer.base_point()) {
    for (int k = 0; k < n; ++k) {
      const double q = (*outer.base_point())[k];
      if (std::abs(inner[k].value() - q) > 1e-12 * (1.0 + std::abs(q)))
        throw JetError("compose: inner values do not match the outer base point");
    }
  }
  std::vector<Jet> delta;
  delta.reserve(n);
  for (const Jet& in : inner) {
    Jet d = in.truncated(order);
    d -= Jet(d.value());
    delta.push_back(std::move(d));
  }
  // Horner form: o0 + sum_k dk (o_k + 1/2 sum_l dl (o_kl + 1/3 sum_m o_klm dm)).
  Jet result = Jet(outer.value());
  for (int k = 0; k < n; ++k) {
    if (order < 1) break;
    Jet inner_k = Jet(outer.d(k));
    if (order >= 2) {
      Jet acc;
      for (int l = 0; l < n; ++l) {
        Jet t = Jet(outer.d(k, l));
        if (order >= 3)
          for (int m = 0; m < n; ++m) {
            const double c = outer.d(k, l, m);
            if (c != 0.0) t += delta[m] * (c / 3.0);
          }
        acc += delta[l] * t;
      }
      inner_k += acc * 0.5;
    }
    result += delta[k] * inner_k;
  }
  if (result.is_scalar() && !inner.empty() && !inner[0].is_scalar())
    result = inner[0].truncated(order).constant_like(result.value());
  return result;
}

}  // namespace consas
