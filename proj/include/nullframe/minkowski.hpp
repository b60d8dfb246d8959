#pragma once

#include <cmath>

#include "nullframe/b_solver.hpp"
#include "nullframe/curve.hpp"
#include "nullframe/errors.hpp"
#include "nullframe/linalg.hpp"

namespace nullframe {

// The two explicit Cartan framed slant null curves on the flat model, with
// E = exp((t+u)/a):
//   C1(t) = ( a/2 (E - a^2/E) + c1,  a/2 (E + a^2/E) + c2,  a t + c3 )
//   C2(t) = (-a/2 (E - a^2/E) + c4, -a/2 (E + a^2/E) + c5,  a t + c6 )
// Tangents satisfy x3' = a and -x1'^2 + x2'^2 + a^2 = 0, so both are slant
// null with b(t) = 2 x1' x2' equal to the closed-form F0 solution.
class MinkowskiCartanCurve {
 public:
  enum class Branch { C1, C2 };

  MinkowskiCartanCurve(Branch branch, double a, double u,
                       Vec3d offsets = Vec3d{})
      : branch_(branch), a_(a), u_(u), offsets_(offsets) {
    if (a == 0.0) throw ZeroSlant();
  }

  Branch branch() const { return branch_; }
  double a() const { return a_; }
  double u() const { return u_; }

  Vec3d position(double t) const {
    const double e = std::exp((t + u_) / a_);
    const double sgn = branch_ == Branch::C1 ? 1.0 : -1.0;
    return {sgn * 0.5 * a_ * (e - a_ * a_ / e) + offsets_[0],
            sgn * 0.5 * a_ * (e + a_ * a_ / e) + offsets_[1],
            a_ * t + offsets_[2]};
  }

  Vec3d tangent(double t) const {
    const double e = std::exp((t + u_) / a_);
    const double sgn = branch_ == Branch::C1 ? 1.0 : -1.0;
    return {sgn * 0.5 * (e + a_ * a_ / e), sgn * 0.5 * (e - a_ * a_ / e), a_};
  }

  // phi C' = (-x2', x1', 0) in the flat structure.
  Vec3d phi_tangent(double t) const {
    const Vec3d c = tangent(t);
    return {-c[1], c[0], 0.0};
  }

  double b(double t) const {
    const Vec3d c = tangent(t);
    return 2.0 * c[0] * c[1];
  }

  double rho(double t) const {
    const double e2 = std::exp(2.0 * (t + u_) / a_);
    const double a4 = std::pow(a_, 4);
    return (e2 - a4 / e2) / (e2 + a4 / e2);
  }

  Vec3d N(double t) const {
    const Vec3d xi{0.0, 0.0, 1.0};
    return (1.0 / a_) * xi - (1.0 / (2.0 * a_ * a_)) * tangent(t);
  }

  // W from the displayed rho-expression. Its phi C' factor divides by
  // E^2 - a^4/E^2 = 2b, which vanishes where b = 0; there the equivalent
  // regular form alpha xi - (alpha/a) C' + gamma phi C' is used.
  Vec3d W(double t) const {
    const Vec3d xi{0.0, 0.0, 1.0};
    const double e2 = std::exp(2.0 * (t + u_) / a_);
    const double a4 = std::pow(a_, 4);
    const double diff = e2 - a4 / e2;  // = 2 b(t)
    const double sum = e2 + a4 / e2;   // = 2 sqrt(a^4 + b^2)
    if (std::abs(diff) >= 1e-3 * sum) {
      return -rho(t) *
             (xi - (1.0 / a_) * tangent(t) - (2.0 * a_ / diff) * phi_tangent(t));
    }
    const double bt = b(t);
    const double s = std::sqrt(a4 + bt * bt);
    const double alpha = -bt / s;
    const double gamma = a_ / s;
    return alpha * xi - (alpha / a_) * tangent(t) + gamma * phi_tangent(t);
  }

  CurveRep as_curve(double t0, double t1, int samples) const {
    return CurveRep::analytic([*this](double t) { return position(t); },
                              [*this](double t) { return tangent(t); }, t0, t1,
                              samples, BasisTag::coordinate);
  }

 private:
  Branch branch_;
  double a_, u_;
  Vec3d offsets_;
};

inline MinkowskiCartanCurve make_minkowski_curve(
    MinkowskiCartanCurve::Branch branch, double a, double u,
    Vec3d offsets = Vec3d{}) {
  return MinkowskiCartanCurve(branch, a, u, offsets);
}

}  // namespace nullframe
