#pragma once

#include <cstddef>

#include "nullframe/linalg.hpp"
#include "nullframe/structure.hpp"

namespace nullframe {

// Lie brackets of a fixed frame: [Ei,Ej] stored as component vectors.
// Both manifold models have constant structure "constants", so a plain
// antisymmetric table is all that is needed.
template <typename T>
struct Brackets3 {
  std::array<std::array<Vec3<T>, 3>, 3> table{};

  // Sets [Ei,Ej] = v and [Ej,Ei] = -v.
  void set(std::size_t i, std::size_t j, const Vec3<T>& v) {
    table[i][j] = v;
    table[j][i] = -v;
  }

  const Vec3<T>& of(std::size_t i, std::size_t j) const { return table[i][j]; }

  // Bilinear extension to constant-component fields.
  Vec3<T> bracket(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out += (u[i] * v[j]) * table[i][j];
    return out;
  }
};

using Bracketsd = Brackets3<double>;

// Christoffel coefficients of a connection that is constant in the fixed
// basis: coeff[i][j] = nabla_{Ei} Ej as a component vector (27 scalars).
template <typename T>
struct Christoffel3 {
  std::array<std::array<Vec3<T>, 3>, 3> coeff{};

  const Vec3<T>& of(std::size_t i, std::size_t j) const { return coeff[i][j]; }

  // Bilinear Gamma(u,v) = u^i v^j nabla_{Ei} Ej.
  Vec3<T> gamma(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out += (u[i] * v[j]) * coeff[i][j];
    return out;
  }
};

using ConnectionModel = Christoffel3<double>;

// Covariant derivative along a curve direction of a field given by its
// component values and their parameter derivative at the point:
//   (D field)^k = field_derivative^k + Gamma^k_{ij} along^i field^j.
template <typename T>
Vec3<T> covariant_derivative(const Christoffel3<T>& conn, const Vec3<T>& along,
                             const Vec3<T>& field_value,
                             const Vec3<T>& field_derivative) {
  return field_derivative + conn.gamma(along, field_value);
}

// Levi-Civita connection of a constant left-invariant metric from the Koszul
// formula
//   2 g(nabla_{Ei} Ej, Ek) = g([Ei,Ej],Ek) - g([Ej,Ek],Ei) + g([Ek,Ei],Ej).
// Exact over rational scalars. Throws on a degenerate metric.
template <typename T>
Christoffel3<T> koszul_connection(const Mat3<T>& g, const Brackets3<T>& br) {
  const Mat3<T> ginv = inverse(g);  // throws std::domain_error if degenerate
  auto pair = [&](const Vec3<T>& u, const Vec3<T>& v) { return dot(u, g * v); };
  auto basis_vec = [](std::size_t i) {
    Vec3<T> v;
    v[i] = T(1);
    return v;
  };
  Christoffel3<T> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec3<T> rhs;  // rhs[k] = g(nabla_{Ei} Ej, Ek)
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec3<T> ek = basis_vec(k);
        const T two = T(2);
        rhs[k] = (pair(br.of(i, j), ek) - pair(br.of(j, k), basis_vec(i)) +
                  pair(br.of(k, i), basis_vec(j))) /
                 two;
      }
      out.coeff[i][j] = ginv * rhs;
    }
  return out;
}

// max_k |g(nabla_i Ej, Ek) + g(Ej, nabla_i Ek)| over all triples; the metric
// is constant in the fixed basis, so compatibility means this vanishes.
inline double metric_compat_residual(const Metric3& g,
                                     const ConnectionModel& conn) {
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  double out = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        out = std::max(out, std::abs(g.eval(conn.of(i, j), basis_vec(k)) +
                                     g.eval(basis_vec(j), conn.of(i, k))));
  return out;
}

// max_ij |nabla_i Ej - nabla_j Ei - [Ei,Ej]|.
inline double torsion_residual(const ConnectionModel& conn,
                               const Bracketsd& br) {
  double out = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out = std::max(out, linf(conn.of(i, j) - conn.of(j, i) - br.of(i, j)));
  return out;
}

}  // namespace nullframe
