#pragma once

#include <cmath>
#include <type_traits>

#include "nullframe/connection.hpp"
#include "nullframe/errors.hpp"
#include "nullframe/linalg.hpp"
#include "nullframe/rational.hpp"

namespace nullframe {

// The slant null direction on the Lie-group model with equal Lie parameters
// (c, c) and slant constant a, where c a > 0 and c != +-1/a^2:
//   X    = (a, q, r),   q = (c^2 a^4 - 1)/(2 c a),   r = (c^2 a^4 + 1)/(2 c a)
//   phiX = (0, -r, q)
//   b    = -2 q r,      s = sqrt(a^4 + b^2) = (c^4 a^8 + 1)/(2 c^2 a^2)
// All quantities are rational in (c, a); instantiating with Rational keeps
// them exact.
template <typename T>
struct LieSlantData {
  T c{}, a{};
  T p{}, q{}, r{};
  T b{}, s{};
  T alpha{}, gamma{};  // distinguished-frame coefficients -b/s, a/s
  T tau{};             // -1/(2 a^2)
  Vec3<T> X, phiX, N1, W1;

  // c a r - 1 - c a q; zero by construction (the Cartan condition).
  T cartan_condition_residual() const { return c * a * r - T(1) - c * a * q; }
};

using LieSlantVector = LieSlantData<double>;
using LieSlantVectorExact = LieSlantData<Rational>;

template <typename T>
LieSlantData<T> make_lie_slant_vector(T c, T a) {
  if (!(c * a > T(0))) throw OrientationDomain();
  const T ca4 = c * c * a * a * a * a;
  if constexpr (std::is_same_v<T, Rational>) {
    if (ca4 == T(1)) throw DegenerateB();
  } else {
    if (std::abs(ca4 - T(1)) < 1e-12) throw DegenerateB();
  }

  LieSlantData<T> v;
  v.c = c;
  v.a = a;
  v.p = a;
  const T two_ca = T(2) * c * a;
  v.q = (ca4 - T(1)) / two_ca;
  v.r = (ca4 + T(1)) / two_ca;
  v.b = -(T(2) * v.q * v.r);
  v.s = (ca4 * ca4 + T(1)) / (T(2) * c * c * a * a);
  v.alpha = -(v.b / v.s);
  v.gamma = a / v.s;
  v.tau = -(T(1) / (T(2) * a * a));
  v.X = {v.p, v.q, v.r};
  v.phiX = {T(0), -v.r, v.q};
  const Vec3<T> xi{T(1), T(0), T(0)};
  v.N1 = (T(1) / a) * xi - (T(1) / (T(2) * a * a)) * v.X;
  v.W1 = v.alpha * xi - (v.alpha / a) * v.X + v.gamma * v.phiX;
  return v;
}

inline LieSlantVector to_double(const LieSlantVectorExact& e) {
  LieSlantVector v;
  v.c = e.c.to_double();
  v.a = e.a.to_double();
  v.p = e.p.to_double();
  v.q = e.q.to_double();
  v.r = e.r.to_double();
  v.b = e.b.to_double();
  v.s = e.s.to_double();
  v.alpha = e.alpha.to_double();
  v.gamma = e.gamma.to_double();
  v.tau = e.tau.to_double();
  for (std::size_t i = 0; i < 3; ++i) {
    v.X[i] = e.X[i].to_double();
    v.phiX[i] = e.phiX[i].to_double();
    v.N1[i] = e.N1[i].to_double();
    v.W1[i] = e.W1[i].to_double();
  }
  return v;
}

// Levi-Civita coefficients of the Lie model over any scalar; exact for
// Rational inputs. g = diag(1,1,-1), [E1,E2] = c1 E1 + c2 E2.
template <typename T>
Christoffel3<T> lie_koszul(T c1, T c2) {
  Mat3<T> g = Mat3<T>::diag(T(1), T(1), -T(1));
  Brackets3<T> br;
  br.set(1, 2, Vec3<T>{T(0), c1, c2});
  return koszul_connection(g, br);
}

// Matrix representation pi of the Lie algebra (alpha = beta = c case) and
// its values on the frame vectors. pi is a Lie algebra homomorphism; the
// generators are
//   pi(E0) = 0,  pi(E1) = [[0,0,0],[0,0,0],[0,-c,-c]],
//   pi(E2) = [[0,0,0],[0,c,c],[0,0,0]].
template <typename T>
struct LieMatrixRep {
  Mat3<T> pi_E0, pi_E1, pi_E2;
  Mat3<T> pi_X, pi_phiX, pi_N1, pi_W1;

  Mat3<T> pi_of(const Vec3<T>& v) const {
    return v[0] * pi_E0 + v[1] * pi_E1 + v[2] * pi_E2;
  }
};

template <typename T>
LieMatrixRep<T> lie_matrix_rep(const LieSlantData<T>& v) {
  LieMatrixRep<T> rep;
  rep.pi_E0 = Mat3<T>::zero();
  rep.pi_E1 = Mat3<T>::zero();
  rep.pi_E1(2, 1) = -v.c;
  rep.pi_E1(2, 2) = -v.c;
  rep.pi_E2 = Mat3<T>::zero();
  rep.pi_E2(1, 1) = v.c;
  rep.pi_E2(1, 2) = v.c;
  rep.pi_X = rep.pi_of(v.X);
  rep.pi_phiX = rep.pi_of(v.phiX);
  rep.pi_N1 = rep.pi_of(v.N1);
  rep.pi_W1 = rep.pi_of(v.W1);
  return rep;
}

// exp(A) = E + ((exp(tr A) - 1)/tr A) A, exact on the family A^2 = (tr A) A
// with tr A != 0. pi(tX) lies in this family for every t != 0.
inline Mat3d group_exponential(const Mat3d& A) {
  const double tr = trace(A);
  if (std::abs(tr) < 1e-12) throw TraceZero();
  const double family_residual = linf(A * A - tr * A);
  if (family_residual > 1e-10)
    throw NotProjectiveFamily("A^2 - (tr A) A residual " +
                              std::to_string(family_residual));
  return Mat3d::identity() + (std::expm1(tr) / tr) * A;
}

// Pi(C(t)) = exp(pi(tX)); the identity at t = 0.
inline Mat3d group_curve(const LieSlantVector& v, double t) {
  if (t == 0.0) return Mat3d::identity();
  const LieMatrixRep<double> rep = lie_matrix_rep(v);
  return group_exponential(t * rep.pi_X);
}

}  // namespace nullframe
