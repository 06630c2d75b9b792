#pragma once

// Small dense matrices over double or Jet.  Chart dimensions never exceed
// seven, so everything is stored row-major in a flat vector.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "consas/jet.hpp"

namespace consas {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet& x) { return x.value(); }

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0.0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply size mismatch");
    std::vector<T> out(rows_, T(0.0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k)
        for (int c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(double s, Matrix a) {
    for (auto& x : a.data_) x = x * s;
    return a;
  }

  template <typename F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

inline Matrix<double> values(const Matrix<Jet>& m) {
  return m.map([](const Jet& j) { return j.value(); });
}

inline double one_norm(const Matrix<double>& m) {
  double best = 0.0;
  for (int c = 0; c < m.cols(); ++c) {
    double s = 0.0;
    for (int r = 0; r < m.rows(); ++r) s += std::abs(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

// Inverse by LU with partial pivoting (pivots chosen on the value part).
// Throws SingularMatrixError when the 1-norm condition estimate exceeds
// `max_condition`.
template <typename T>
Matrix<T> inverse(const Matrix<T>& a, double max_condition = 1e12) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  Matrix<T> lu = a;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(scalar_value(lu(k, k)));
    for (int r = k + 1; r < n; ++r) {
      const double v = std::abs(scalar_value(lu(r, k)));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) throw SingularMatrixError("inverse: matrix is singular");
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      std::swap(perm[k], perm[piv]);
    }
    for (int r = k + 1; r < n; ++r) {
      lu(r, k) = lu(r, k) / lu(k, k);
      for (int c = k + 1; c < n; ++c) lu(r, c) -= lu(r, k) * lu(k, c);
    }
  }
  Matrix<T> inv(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<T> x(n, T(0.0));
    for (int i = 0; i < n; ++i) {
      T s = T(perm[i] == col ? 1.0 : 0.0);
      for (int j = 0; j < i; ++j) s -= lu(i, j) * x[j];
      x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      T s = x[i];
      for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
      x[i] = s / lu(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  Matrix<double> av(n, n), iv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      av(r, c) = scalar_value(a(r, c));
      iv(r, c) = scalar_value(inv(r, c));
    }
  const double cond = one_norm(av) * one_norm(iv);
  if (!(cond <= max_condition)) throw SingularMatrixError("inverse: condition estimate exceeds bound");
  return inv;
}

// Smallest eigenvalue of a symmetric matrix (cyclic Jacobi).
inline double min_eigenvalue(Matrix<double> a) {
  const int n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  double m = a(0, 0);
  for (int i = 1; i < n; ++i) m = std::min(m, a(i, i));
  return m;
}

// Plain-vector helpers used throughout the geometry code.
using Vec = std::vector<double>;

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vec operator*(double s, Vec a) {
  for (double& x : a) x *= s;
  return a;
}
inline Vec& operator+=(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vec& operator-=(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline double max_abs(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}
inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Vec mul(const Matrix<double>& m, const Vec& v) { return m.apply(std::span<const double>(v)); }
inline double bilinear(const Matrix<double>& m, const Vec& a, const Vec& b) { return dot(a, mul(m, b)); }

}  // namespace consas
