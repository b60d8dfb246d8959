#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "nullframe/errors.hpp"

namespace nullframe {

// Initial-value problem for the Cartan condition on b:
//   b' = b theta(phi C') - a^2 theta(C') + (2/a) sqrt(a^4 + b^2),
// theta terms supplied as callbacks of t (constants on the Lie model,
// zero on F0).
struct BOdeProblem {
  double a = 1.0;
  std::function<double(double)> theta_C = [](double) { return 0.0; };
  std::function<double(double)> theta_phiC = [](double) { return 0.0; };
  double b0 = 0.0;
  double t0 = 0.0, t1 = 1.0;
  double step = 1e-3;
};

struct BSolution {
  std::vector<double> t, b;
};

// Classical fixed-step RK4. The step count is rounded so the grid lands on
// t1 exactly; global error O(step^4).
inline BSolution solve_b_numeric(const BOdeProblem& p) {
  if (p.a == 0.0) throw ZeroSlant();
  if (!(p.step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(p.t0 < p.t1)) throw std::invalid_argument("need t0 < t1");

  const double a4 = p.a * p.a * p.a * p.a;
  auto rhs = [&](double t, double b) {
    return b * p.theta_phiC(t) - p.a * p.a * p.theta_C(t) +
           (2.0 / p.a) * std::sqrt(a4 + b * b);
  };

  const long long nsteps =
      std::max<long long>(1, std::llround((p.t1 - p.t0) / p.step));
  const double h = (p.t1 - p.t0) / static_cast<double>(nsteps);

  BSolution out;
  out.t.reserve(nsteps + 1);
  out.b.reserve(nsteps + 1);
  double t = p.t0, b = p.b0;
  out.t.push_back(t);
  out.b.push_back(b);
  for (long long i = 0; i < nsteps; ++i) {
    const double k1 = rhs(t, b);
    const double k2 = rhs(t + 0.5 * h, b + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, b + 0.5 * h * k2);
    const double k4 = rhs(t + h, b + h * k3);
    b += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = p.t0 + (i + 1) * h;
    if (!std::isfinite(b))
      throw NonFinite("b overflowed at t = " + std::to_string(t));
    out.t.push_back(t);
    out.b.push_back(b);
  }
  return out;
}

// Closed-form solution on F0 (theta = 0):
//   b(t) = 1/2 [ exp(2(t+u)/a) - a^4 exp(-2(t+u)/a) ].
inline double analytic_b_F0(double a, double u, double t) {
  if (a == 0.0) throw ZeroSlant();
  const double e = std::exp(2.0 * (t + u) / a);
  return 0.5 * (e - a * a * a * a / e);
}

// Integration constant from one sample: u = (a/2) ln(b0 + sqrt(a^4+b0^2)) - t0.
// The log argument is positive for every (a != 0, b0).
inline double invert_b_for_u(double a, double t0, double b0) {
  if (a == 0.0) throw ZeroSlant();
  const double a4 = a * a * a * a;
  const double s = std::sqrt(a4 + b0 * b0);
  // b0 + s cancels for b0 < 0; rewrite via (s^2 - b0^2)/(s - b0).
  const double arg = b0 >= 0.0 ? b0 + s : a4 / (s - b0);
  return 0.5 * a * std::log(arg) - t0;
}

}  // namespace nullframe
