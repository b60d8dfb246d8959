#pragma once

#include <string>
#include <vector>

#include "nullframe/errors.hpp"
#include "nullframe/linalg.hpp"

namespace nullframe {

// Which fixed frame the component values refer to: the coordinate basis of
// the flat model or the left-invariant basis {E0,E1,E2} of the Lie model.
enum class BasisTag { coordinate, left_invariant };

// Symmetric metric of signature (2,1) in the fixed basis.
struct Metric3 {
  Mat3d m;

  double eval(const Vec3d& u, const Vec3d& v) const { return dot(u, m * v); }
  Mat3d inv() const { return inverse(m); }
  Signature sig(double tol = 1e-10) const { return signature(m, tol); }

  double symmetry_residual() const {
    double out = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        out = std::max(out, std::abs(m(i, j) - m(j, i)));
    return out;
  }
};

inline double metric_eval(const Metric3& g, const Vec3d& u, const Vec3d& v) {
  return g.eval(u, v);
}

// The quadruple (phi, xi, eta, g) in a fixed basis.
struct StructureTensors {
  Mat3d phi;      // endomorphism, column-acting: (phi v)^i = phi[i][j] v^j
  Vec3d xi;       // Reeb vector
  Vec3d eta;      // contact 1-form as covector components
  Metric3 g;
  BasisTag basis = BasisTag::coordinate;

  double eta_of(const Vec3d& v) const { return dot(eta, v); }
  Vec3d phi_of(const Vec3d& v) const { return phi * v; }
};

inline Vec3d apply_phi(const StructureTensors& s, const Vec3d& v) {
  return s.phi * v;
}

struct AxiomResidual {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct StructureReport {
  std::vector<AxiomResidual> axioms;
  double tol = 1e-10;

  bool pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
  double max_residual() const {
    double out = 0.0;
    for (const auto& a : axioms) out = std::max(out, a.residual);
    return out;
  }
};

// Residuals of the defining axioms:
//   phi^2 v = -v + eta(v) xi        eta(xi) = 1      eta o phi = 0
//   phi xi = 0                      rank(phi) = 2
//   g(phi u, phi v) = -g(u,v) + eta(u) eta(v)
//   eta(v) = g(v, xi)               g(xi,xi) = 1
// plus symmetry and signature (2,1) of g. Reports, never throws.
inline StructureReport check_structure(const StructureTensors& s,
                                       double tol = 1e-10) {
  StructureReport rep;
  rep.tol = tol;
  auto push = [&](std::string name, double r) {
    rep.axioms.push_back({std::move(name), r, r < tol});
  };
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };

  double r_phi2 = 0.0, r_etaphi = 0.0, r_bmetric = 0.0, r_eta_g = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3d v = basis_vec(i);
    r_phi2 = std::max(r_phi2, linf(s.phi * (s.phi * v) + v - s.eta_of(v) * s.xi));
    r_etaphi = std::max(r_etaphi, std::abs(s.eta_of(s.phi * v)));
    r_eta_g = std::max(r_eta_g, std::abs(s.eta_of(v) - s.g.eval(v, s.xi)));
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3d w = basis_vec(j);
      r_bmetric = std::max(
          r_bmetric, std::abs(s.g.eval(s.phi * v, s.phi * w) + s.g.eval(v, w) -
                              s.eta_of(v) * s.eta_of(w)));
    }
  }
  push("phi_squared", r_phi2);
  push("eta_xi", std::abs(s.eta_of(s.xi) - 1.0));
  push("eta_phi", r_etaphi);
  push("phi_xi", linf(s.phi * s.xi));
  push("b_metric", r_bmetric);
  push("eta_is_g_xi", r_eta_g);
  push("g_xi_xi", std::abs(s.g.eval(s.xi, s.xi) - 1.0));
  push("g_symmetry", s.g.symmetry_residual());

  // rank(phi) = 2: the smallest singular value of phi must vanish and the
  // middle one must not. Eigenvalues of phi^T phi give the squares.
  const auto ptp = sym_eigenvalues(transpose(s.phi) * s.phi);
  push("rank_phi_nullity", std::abs(ptp[2]));
  rep.axioms.push_back(
      {"rank_phi_two", ptp[1] > tol ? 0.0 : 1.0, ptp[1] > tol});

  const Signature sig = s.g.sig();
  const bool sig_ok = sig.positive == 2 && sig.negative == 1;
  rep.axioms.push_back({"signature_2_1", sig_ok ? 0.0 : 1.0, sig_ok});
  return rep;
}

// Associated metric gt(u,v) = g(u, phi v) + eta(u) eta(v).
// Throws if the result comes out asymmetric (broken input structure).
inline Metric3 associated_metric(const StructureTensors& s,
                                 double tol = 1e-10) {
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  Metric3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3d u = basis_vec(i), v = basis_vec(j);
      out.m(i, j) = s.g.eval(u, s.phi * v) + s.eta_of(u) * s.eta_of(v);
    }
  if (out.symmetry_residual() > tol)
    throw Error("associated metric is asymmetric; input structure is broken");
  return out;
}

}  // namespace nullframe
