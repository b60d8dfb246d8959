#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace nullframe {

// Fixed 3-dimensional linear algebra over an exact or floating scalar.
// Every structure here is a plain value; all operations are pure.

template <typename T>
struct Vec3 {
  std::array<T, 3> c{};

  Vec3() = default;
  Vec3(T a, T b, T d) : c{a, b, d} {}

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
  friend Vec3 operator*(const T& s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
  }
  friend Vec3 operator*(const Vec3& a, const T& s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, const T& s) {
    return {a[0] / s, a[1] / s, a[2] / s};
  }
  Vec3& operator+=(const Vec3& o) { return *this = *this + o; }
  Vec3& operator-=(const Vec3& o) { return *this = *this - o; }

  friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
};

template <typename T>
struct Mat3 {
  // Row-major: m[row][col].
  std::array<std::array<T, 3>, 3> m{};

  T& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity() { return diag(T(1), T(1), T(1)); }
  static Mat3 diag(T a, T b, T c) {
    Mat3 out;
    out(0, 0) = a;
    out(1, 1) = b;
    out(2, 2) = c;
    return out;
  }

  Vec3<T> row(std::size_t i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vec3<T> col(std::size_t j) const { return {m[0][j], m[1][j], m[2][j]}; }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
  }
  friend Mat3 operator*(const T& s, const Mat3& a) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = s * a(i, j);
    return out;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        T acc = a(i, 0) * b(0, j);
        acc += a(i, 1) * b(1, j);
        acc += a(i, 2) * b(2, j);
        out(i, j) = acc;
      }
    return out;
  }
  friend Vec3<T> operator*(const Mat3& a, const Vec3<T>& v) {
    Vec3<T> out;
    for (std::size_t i = 0; i < 3; ++i)
      out[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
    return out;
  }

  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename T>
Mat3<T> transpose(const Mat3<T>& a) {
  Mat3<T> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(j, i);
  return out;
}

template <typename T>
T trace(const Mat3<T>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2);
}

template <typename T>
T det(const Mat3<T>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Closed-form inverse via the adjugate; exact for rational scalars.
template <typename T>
Mat3<T> inverse(const Mat3<T>& a) {
  T d = det(a);
  if (d == T(0)) throw std::domain_error("singular 3x3 matrix");
  Mat3<T> adj;
  adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Mat3<T> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = adj(i, j) / d;
  return out;
}

inline double linf(const Vec3d& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline double linf(const Mat3d& a) {
  double out = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out = std::max(out, std::abs(a(i, j)));
  return out;
}

inline double norm2(const Vec3d& v) { return std::sqrt(dot(v, v)); }

// Eigenvalues of a symmetric 3x3 matrix, descending, by the standard
// trigonometric closed form.
inline std::array<double, 3> sym_eigenvalues(const Mat3d& a) {
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  if (p1 == 0.0) {
    std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
    if (ev[0] < ev[1]) std::swap(ev[0], ev[1]);
    if (ev[1] < ev[2]) std::swap(ev[1], ev[2]);
    if (ev[0] < ev[1]) std::swap(ev[0], ev[1]);
    return ev;
  }
  const double q = trace(a) / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Mat3d b = a;
  for (std::size_t i = 0; i < 3; ++i) b(i, i) -= q;
  b = (1.0 / p) * b;
  double r = det(b) / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  constexpr double two_thirds_pi = 2.0943951023931953;
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + two_thirds_pi);
  const double e2 = 3.0 * q - e1 - e3;
  return {e1, e2, e3};
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Eigenvalue-sign signature of a symmetric matrix; |lambda| < tol*scale
// counts as zero.
inline Signature signature(const Mat3d& a, double tol = 1e-10) {
  const auto ev = sym_eigenvalues(a);
  const double scale =
      std::max({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2]), 1.0});
  Signature s;
  for (double e : ev) {
    if (std::abs(e) < tol * scale)
      ++s.zero;
    else if (e > 0.0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

// Fourth-order central derivative (one Richardson refinement).
template <typename F>
auto richardson_derivative(F&& f, double t, double h = 1e-3)
    -> decltype(f(t)) {
  auto coarse = (f(t + h) - f(t - h)) / (2.0 * h);
  auto fine = (f(t + 0.5 * h) - f(t - 0.5 * h)) / h;
  return (1.0 / 3.0) * (4.0 * fine - coarse);
}

}  // namespace nullframe
