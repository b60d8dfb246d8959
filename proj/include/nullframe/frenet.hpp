#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <vector>

#include "nullframe/connection.hpp"
#include "nullframe/curve.hpp"
#include "nullframe/errors.hpp"
#include "nullframe/models.hpp"

namespace nullframe {

// Certificate that a curve is null (g(C',C') = 0) and slant (eta(C') = a
// constant). a is the sample mean of eta(C'); the residuals record the worst
// deviation from both conditions.
struct SlantNullCertificate {
  double a = 0.0;
  double max_null_residual = 0.0;
  double max_slant_residual = 0.0;
  double tol = 1e-8;

  bool valid() const {
    return max_null_residual < tol && max_slant_residual < tol;
  }
  bool valid_for_frame() const { return valid() && std::abs(a) > tol; }
};

inline SlantNullCertificate slant_null_check(const CurveRep& curve,
                                             const Model& model,
                                             double tol = 1e-8) {
  if (curve.basis() != model.structure.basis)
    throw Error("curve and model use different bases");
  SlantNullCertificate cert;
  cert.tol = tol;
  double eta_sum = 0.0;
  const int n = curve.samples();
  std::vector<double> etas(n);
  for (int i = 0; i < n; ++i) {
    const Vec3d cdot = curve.tangent_at(i);
    if (linf(cdot) < 1e-14)
      throw TangentVanishes("tangent vanishes at t = " +
                            std::to_string(curve.time_at(i)));
    cert.max_null_residual =
        std::max(cert.max_null_residual, std::abs(model.g().eval(cdot, cdot)));
    etas[i] = model.eta_of(cdot);
    eta_sum += etas[i];
  }
  cert.a = eta_sum / n;
  for (double e : etas)
    cert.max_slant_residual = std::max(cert.max_slant_residual, std::abs(e - cert.a));
  return cert;
}

namespace detail {

// Scalar/vector derivative on a uniform grid; same stencils as the sampled
// curve representation.
template <typename V>
std::vector<V> grid_derivative(const std::vector<V>& y, double h) {
  const int n = static_cast<int>(y.size());
  std::vector<V> out(n);
  for (int i = 0; i < n; ++i) out[i] = sampled_derivative(y, i, h);
  return out;
}

}  // namespace detail

// b(t) = g(C', phi C') per sample, with its parameter derivative.
struct BSamples {
  std::vector<double> t, b, db_dt;
};

inline double b_of_tangent(const Model& model, const Vec3d& cdot) {
  return model.g().eval(cdot, model.phi_of(cdot));
}

inline BSamples compute_b(const CurveRep& curve, const Model& model) {
  const int n = curve.samples();
  BSamples out;
  out.t.resize(n);
  out.b.resize(n);
  out.db_dt.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    out.t[i] = curve.time_at(i);
    out.b[i] = b_of_tangent(model, curve.tangent_at(i));
  }
  switch (curve.kind()) {
    case CurveRep::Kind::left_invariant_constant:
      break;  // b constant along one-parameter subgroups
    case CurveRep::Kind::coordinate_analytic:
      for (int i = 0; i < n; ++i)
        out.db_dt[i] = richardson_derivative(
            [&](double t) { return b_of_tangent(model, curve.tangent(t)); },
            out.t[i], curve.fd_step());
      break;
    case CurveRep::Kind::coordinate_sampled:
      out.db_dt = detail::grid_derivative(out.b, curve.dt());
      break;
  }
  return out;
}

// Expansion coefficients of a general Frenet frame over {C', xi, phi C'}:
//   W = alpha xi + beta C' + gamma phi C'
//   N = lambda xi + mu C' + nu phi C'
struct FrameCoefficients {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double lambda = 0.0, mu = 0.0, nu = 0.0;
};

// Solves the frame relations for given (a, b) and free function value beta:
//   alpha  = -b / sqrt(a^4 + b^2)
//   gamma  =  a / sqrt(a^4 + b^2)
//   lambda = (a^3 + beta b s) / (a^4 + b^2)
//   mu     = -(a^2 + beta^2 (a^4 + b^2)) / (2 (a^4 + b^2))
//   nu     = (b - beta a s) / (a^4 + b^2),  s = sqrt(a^4 + b^2).
// gamma carries the sign of a: the positive orientation choice for a > 0.
inline FrameCoefficients general_frame_coefficients(double a, double b,
                                                    double beta) {
  if (a == 0.0) throw ZeroSlant();
  const double s2 = a * a * a * a + b * b;
  const double s = std::sqrt(s2);
  FrameCoefficients f;
  f.alpha = -b / s;
  f.gamma = a / s;
  f.beta = beta;
  f.lambda = (a * a * a + beta * b * s) / s2;
  f.mu = -(a * a + beta * beta * s2) / (2.0 * s2);
  f.nu = (b - beta * a * s) / s2;
  return f;
}

// beta as a function of (a, b); enough to express the distinguished choice
// beta = -alpha/a and perturbations of it.
using BetaRule = std::function<double(double a, double b)>;

inline BetaRule constant_beta(double value) {
  return [value](double, double) { return value; };
}

inline BetaRule distinguished_beta(double offset = 0.0) {
  return [offset](double a, double b) {
    const double alpha = -b / std::sqrt(a * a * a * a + b * b);
    return -alpha / a + offset;
  };
}

struct FrameSample {
  double t = 0.0;
  Vec3d Cdot, N, W;
  FrameCoefficients coeff;
  double gram_residual = 0.0;  // worst of the five frame relations
};

struct FrenetFrame {
  double a = 0.0;
  BetaRule rule;
  std::vector<FrameSample> samples;
  bool positive_orientation = true;  // gamma > 0 at every sample

  double max_gram_residual() const {
    double out = 0.0;
    for (const auto& s : samples) out = std::max(out, s.gram_residual);
    return out;
  }
};

namespace detail {

inline double gram_residual(const Model& model, const Vec3d& cdot,
                            const Vec3d& N, const Vec3d& W) {
  const auto& g = model.g();
  double r = std::abs(g.eval(cdot, N) - 1.0);
  r = std::max(r, std::abs(g.eval(W, W) - 1.0));
  r = std::max(r, std::abs(g.eval(N, N)));
  r = std::max(r, std::abs(g.eval(N, W)));
  r = std::max(r, std::abs(g.eval(cdot, W)));
  return r;
}

inline FrameSample frame_sample_from_tangent(const Model& model, double a,
                                             const BetaRule& rule, double t,
                                             const Vec3d& cdot) {
  const Vec3d phic = model.phi_of(cdot);
  // {C', xi, phi C'} must span (basis property of null curves).
  Mat3d cols;
  const Vec3d cn = cdot / std::max(norm2(cdot), 1e-300);
  const Vec3d xn = model.xi() / std::max(norm2(model.xi()), 1e-300);
  const Vec3d pn = phic / std::max(norm2(phic), 1e-300);
  for (std::size_t i = 0; i < 3; ++i) {
    cols(i, 0) = cn[i];
    cols(i, 1) = xn[i];
    cols(i, 2) = pn[i];
  }
  if (std::abs(det(cols)) < 1e-8)
    throw Error("{C', xi, phi C'} degenerates at t = " + std::to_string(t));

  const double b = b_of_tangent(model, cdot);
  FrameSample s;
  s.t = t;
  s.Cdot = cdot;
  s.coeff = general_frame_coefficients(a, b, rule(a, b));
  s.W = s.coeff.alpha * model.xi() + s.coeff.beta * cdot + s.coeff.gamma * phic;
  s.N = s.coeff.lambda * model.xi() + s.coeff.mu * cdot + s.coeff.nu * phic;
  s.gram_residual = gram_residual(model, cdot, s.N, s.W);
  return s;
}

inline FrameSample frame_sample_at(const CurveRep& curve, const Model& model,
                                   double a, const BetaRule& rule, double t) {
  return frame_sample_from_tangent(model, a, rule, t, curve.tangent(t));
}

}  // namespace detail

// General Frenet frame for an arbitrary beta rule. The slant certificate
// must hold; a comes from it.
inline FrenetFrame general_frame(const CurveRep& curve, const Model& model,
                                 const BetaRule& rule, double cert_tol = 1e-8) {
  const SlantNullCertificate cert = slant_null_check(curve, model, cert_tol);
  if (!cert.valid())
    throw Error("curve is not slant null within tolerance");
  if (std::abs(cert.a) <= cert_tol) throw ZeroSlant();
  FrenetFrame frame;
  frame.a = cert.a;
  frame.rule = rule;
  frame.samples.reserve(curve.samples());
  for (int i = 0; i < curve.samples(); ++i) {
    frame.samples.push_back(detail::frame_sample_from_tangent(
        model, cert.a, rule, curve.time_at(i), curve.tangent_at(i)));
    if (frame.samples.back().coeff.gamma <= 0.0)
      frame.positive_orientation = false;
  }
  return frame;
}

struct CurvatureSample {
  double t = 0.0;
  double h = 0.0, k1 = 0.0, k2 = 0.0;
};

struct CurvatureData {
  std::vector<CurvatureSample> samples;
  double tau_mean = 0.0;  // mean of k2; equals tau on a Cartan frame
  double min_abs_k1 = std::numeric_limits<double>::infinity();
  // Deviation of the direct inner products from the F1 closed form.
  double max_closed_form_dev_h = 0.0;
  double max_closed_form_dev_k1 = 0.0;
};

// h = (nu/2) [b' + a^2 theta(C') - b theta(phi C')], and the same bracket
// times gamma/2 for k1. Valid on F1 (and F0 with theta = 0).
struct ClosedFormHK {
  double h = 0.0, k1 = 0.0;
};

inline ClosedFormHK curvatures_closed_form_F1(double a, double b, double db_dt,
                                              double theta_C, double theta_phiC,
                                              double gamma, double nu) {
  const double bracket = db_dt + a * a * theta_C - b * theta_phiC;
  return {0.5 * nu * bracket, 0.5 * gamma * bracket};
}

namespace detail {

// Parameter derivative of a frame vector at node i. Callback curves rebuild
// the frame at shifted t; sampled curves differentiate the stored samples.
inline Vec3d frame_vector_derivative(const CurveRep& curve, const Model& model,
                                     const FrenetFrame& frame, int i,
                                     bool want_N,
                                     const std::vector<Vec3d>& grid_dN,
                                     const std::vector<Vec3d>& grid_dW) {
  switch (curve.kind()) {
    case CurveRep::Kind::left_invariant_constant:
      return Vec3d{};  // constant coefficients
    case CurveRep::Kind::coordinate_analytic:
      return richardson_derivative(
          [&](double t) {
            const auto s =
                detail::frame_sample_at(curve, model, frame.a, frame.rule, t);
            return want_N ? s.N : s.W;
          },
          curve.time_at(i), curve.fd_step());
    default:
      return want_N ? grid_dN[i] : grid_dW[i];
  }
}

}  // namespace detail

// Direct curvature functions against a frame:
//   h  = g(D C', N)    k1 = g(D C', W)    k2 = g(D N, W)
// with D the covariant derivative along the curve. Also records how far the
// direct values drift from the F1 closed form evaluated with the model's
// Lee form.
inline CurvatureData curvatures(const CurveRep& curve, const Model& model,
                                const FrenetFrame& frame) {
  const int n = curve.samples();
  const BSamples bs = compute_b(curve, model);
  CurvatureData out;
  out.samples.resize(n);

  std::vector<Vec3d> grid_dN, grid_dW;
  if (curve.kind() == CurveRep::Kind::coordinate_sampled) {
    std::vector<Vec3d> Ns(n), Ws(n);
    for (int i = 0; i < n; ++i) {
      Ns[i] = frame.samples[i].N;
      Ws[i] = frame.samples[i].W;
    }
    grid_dN = detail::grid_derivative(Ns, curve.dt());
    grid_dW = detail::grid_derivative(Ws, curve.dt());
  }

  double k2_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const FrameSample& fs = frame.samples[i];
    const Vec3d accel = covariant_derivative(model.connection, fs.Cdot, fs.Cdot,
                                             curve.tangent_derivative_at(i));
    const Vec3d dN = detail::frame_vector_derivative(curve, model, frame, i,
                                                     true, grid_dN, grid_dW);
    const Vec3d DN = covariant_derivative(model.connection, fs.Cdot, fs.N, dN);

    CurvatureSample& cs = out.samples[i];
    cs.t = fs.t;
    cs.h = model.g().eval(accel, fs.N);
    cs.k1 = model.g().eval(accel, fs.W);
    cs.k2 = model.g().eval(DN, fs.W);
    k2_sum += cs.k2;
    out.min_abs_k1 = std::min(out.min_abs_k1, std::abs(cs.k1));

    const ClosedFormHK cf = curvatures_closed_form_F1(
        frame.a, bs.b[i], bs.db_dt[i], model.theta_of(fs.Cdot),
        model.theta_of(model.phi_of(fs.Cdot)), fs.coeff.gamma, fs.coeff.nu);
    out.max_closed_form_dev_h =
        std::max(out.max_closed_form_dev_h, std::abs(cs.h - cf.h));
    out.max_closed_form_dev_k1 =
        std::max(out.max_closed_form_dev_k1, std::abs(cs.k1 - cf.k1));
  }
  out.tau_mean = k2_sum / n;
  return out;
}

// The unique frame for which the original parameter is distinguished:
// beta = -alpha/a, hence nu = 0, lambda = 1/a, mu = -1/(2 a^2) and
//   W1 = alpha xi - (alpha/a) C' + gamma phi C'
//   N1 = (1/a) xi - (1/(2 a^2)) C'.
// Throws GeodesicCurve when k1 vanishes somewhere (no such frame exists).
inline FrenetFrame unique_distinguished_frame(const CurveRep& curve,
                                              const Model& model,
                                              double cert_tol = 1e-8,
                                              double geodesic_tol = 1e-8) {
  FrenetFrame frame =
      general_frame(curve, model, distinguished_beta(), cert_tol);
  const CurvatureData curv = curvatures(curve, model, frame);
  if (curv.min_abs_k1 < geodesic_tol) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "curve is geodesic: |k1| < %.1e",
                  geodesic_tol);
    throw GeodesicCurve(buf);
  }
  return frame;
}

// Geodesic criterion: the curve is geodesic iff
//   b' = b theta(phi C') - a^2 theta(C')  at every sample.
struct GeodesicReport {
  bool geodesic = false;
  double max_residual = 0.0;
  double tol = 1e-8;
  std::vector<double> residuals;
};

inline GeodesicReport geodesic_test(const CurveRep& curve, const Model& model,
                                    double tol = 1e-8) {
  const SlantNullCertificate cert = slant_null_check(curve, model);
  if (!cert.valid()) throw Error("curve is not slant null within tolerance");
  const BSamples bs = compute_b(curve, model);
  GeodesicReport rep;
  rep.tol = tol;
  rep.residuals.resize(curve.samples());
  for (int i = 0; i < curve.samples(); ++i) {
    const Vec3d cdot = curve.tangent_at(i);
    rep.residuals[i] =
        std::abs(bs.db_dt[i] - bs.b[i] * model.theta_of(model.phi_of(cdot)) +
                 cert.a * cert.a * model.theta_of(cdot));
    rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
  }
  rep.geodesic = rep.max_residual < tol;
  return rep;
}

// Residuals of the Cartan Frenet equations
//   D C' = W      D N = tau W      D W = -tau C' - N
// with tau taken as the per-sample k2, plus the scalar requirements k1 = 1,
// h = 0 and g(D C', D C') = 1.
struct CartanReport {
  double max_eq1 = 0.0, max_eq2 = 0.0, max_eq3 = 0.0;
  double max_k1_dev = 0.0, max_h_abs = 0.0, max_accel_sq_dev = 0.0;
  double tau_mean = 0.0;
  double scalar_tol = 1e-6, vector_tol = 1e-5;
  bool pass = false;
};

inline CartanReport verify_cartan(const CurveRep& curve, const Model& model,
                                  const FrenetFrame& frame,
                                  const CurvatureData& curv,
                                  double scalar_tol = 1e-6,
                                  double vector_tol = 1e-5) {
  const int n = curve.samples();
  CartanReport rep;
  rep.scalar_tol = scalar_tol;
  rep.vector_tol = vector_tol;
  rep.tau_mean = curv.tau_mean;

  std::vector<Vec3d> grid_dN, grid_dW;
  if (curve.kind() == CurveRep::Kind::coordinate_sampled) {
    std::vector<Vec3d> Ns(n), Ws(n);
    for (int i = 0; i < n; ++i) {
      Ns[i] = frame.samples[i].N;
      Ws[i] = frame.samples[i].W;
    }
    grid_dN = detail::grid_derivative(Ns, curve.dt());
    grid_dW = detail::grid_derivative(Ws, curve.dt());
  }

  for (int i = 0; i < n; ++i) {
    const FrameSample& fs = frame.samples[i];
    const double tau = curv.samples[i].k2;
    const Vec3d accel = covariant_derivative(model.connection, fs.Cdot, fs.Cdot,
                                             curve.tangent_derivative_at(i));
    const Vec3d dN = detail::frame_vector_derivative(curve, model, frame, i,
                                                     true, grid_dN, grid_dW);
    const Vec3d dW = detail::frame_vector_derivative(curve, model, frame, i,
                                                     false, grid_dN, grid_dW);
    const Vec3d DN = covariant_derivative(model.connection, fs.Cdot, fs.N, dN);
    const Vec3d DW = covariant_derivative(model.connection, fs.Cdot, fs.W, dW);

    rep.max_eq1 = std::max(rep.max_eq1, linf(accel - fs.W));
    rep.max_eq2 = std::max(rep.max_eq2, linf(DN - tau * fs.W));
    rep.max_eq3 = std::max(rep.max_eq3, linf(DW + tau * fs.Cdot + fs.N));
    rep.max_k1_dev =
        std::max(rep.max_k1_dev, std::abs(curv.samples[i].k1 - 1.0));
    rep.max_h_abs = std::max(rep.max_h_abs, std::abs(curv.samples[i].h));
    rep.max_accel_sq_dev = std::max(
        rep.max_accel_sq_dev, std::abs(model.g().eval(accel, accel) - 1.0));
  }
  rep.pass = rep.max_eq1 < vector_tol && rep.max_eq2 < vector_tol &&
             rep.max_eq3 < vector_tol && rep.max_k1_dev < scalar_tol &&
             rep.max_h_abs < scalar_tol && rep.max_accel_sq_dev < scalar_tol;
  return rep;
}

}  // namespace nullframe
