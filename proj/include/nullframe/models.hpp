#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "nullframe/connection.hpp"
#include "nullframe/structure.hpp"

namespace nullframe {

enum class ManifoldClass { F0, F1, neither };

inline const char* to_string(ManifoldClass c) {
  switch (c) {
    case ManifoldClass::F0: return "F0";
    case ManifoldClass::F1: return "F1";
    default: return "neither";
  }
}

// A concrete homogeneous manifold model: structure tensors, the (constant)
// Levi-Civita coefficients, frame brackets, and the Lee form theta computed
// from F at construction. Immutable after construction.
struct Model {
  std::string name;  // "flat" or "lie"
  StructureTensors structure;
  ConnectionModel connection;
  Bracketsd brackets;
  Vec3d theta;  // Lee form as a covector; zero on the flat model
  std::optional<std::pair<double, double>> lie_params;  // (c1, c2)

  double theta_of(const Vec3d& v) const { return dot(theta, v); }
  const Metric3& g() const { return structure.g; }
  const Vec3d& xi() const { return structure.xi; }
  double eta_of(const Vec3d& v) const { return structure.eta_of(v); }
  Vec3d phi_of(const Vec3d& v) const { return structure.phi * v; }
};

// F(u,v,w) = g((nabla_u phi) v, w) for constant-component fields.
inline double tensor_F(const Model& m, const Vec3d& u, const Vec3d& v,
                       const Vec3d& w) {
  const Vec3d nabla_phi_v =
      m.connection.gamma(u, m.phi_of(v)) - m.phi_of(m.connection.gamma(u, v));
  return m.g().eval(nabla_phi_v, w);
}

struct LeeForms {
  Vec3d theta, theta_star, omega;
};

// theta(v) = g^{ij} F(Ei,Ej,v), theta*(v) = g^{ij} F(Ei,phi Ej,v),
// omega(v) = F(xi,xi,v), summed over the full fixed basis.
inline LeeForms lee_forms(const Model& m) {
  const Mat3d ginv = m.g().inv();
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  LeeForms out;
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3d w = basis_vec(k);
    double th = 0.0, ths = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (ginv(i, j) == 0.0) continue;
        th += ginv(i, j) * tensor_F(m, basis_vec(i), basis_vec(j), w);
        ths += ginv(i, j) *
               tensor_F(m, basis_vec(i), m.phi_of(basis_vec(j)), w);
      }
    out.theta[k] = th;
    out.theta_star[k] = ths;
    out.omega[k] = tensor_F(m, m.xi(), m.xi(), w);
  }
  return out;
}

namespace detail {

inline Model finish_model(Model m) {
  m.theta = lee_forms(m).theta;
  return m;
}

}  // namespace detail

// Flat model: Minkowski R^3 with phi(d1)=d2, phi(d2)=-d1, phi(d3)=0,
// xi=d3, eta=dx3, g=diag(-1,1,1). All Christoffel coefficients vanish.
inline Model flat_cosymplectic_model() {
  Model m;
  m.name = "flat";
  m.structure.basis = BasisTag::coordinate;
  m.structure.phi = Mat3d::zero();
  m.structure.phi(1, 0) = 1.0;
  m.structure.phi(0, 1) = -1.0;
  m.structure.xi = {0.0, 0.0, 1.0};
  m.structure.eta = {0.0, 0.0, 1.0};
  m.structure.g.m = Mat3d::diag(-1.0, 1.0, 1.0);
  return detail::finish_model(std::move(m));
}

// Lie-group model on the basis {E0,E1,E2}: phi E1 = E2, phi E2 = -E1,
// xi = E0, g = diag(1,1,-1), [E1,E2] = c1 E1 + c2 E2. The Levi-Civita
// coefficients come from the Koszul formula. (c1,c2) = (0,0) is rejected.
inline Model lie_group_model(double c1, double c2) {
  if (c1 == 0.0 && c2 == 0.0)
    throw std::invalid_argument("(c1,c2) must be nonzero");
  Model m;
  m.name = "lie";
  m.structure.basis = BasisTag::left_invariant;
  m.structure.phi = Mat3d::zero();
  m.structure.phi(2, 1) = 1.0;
  m.structure.phi(1, 2) = -1.0;
  m.structure.xi = {1.0, 0.0, 0.0};
  m.structure.eta = {1.0, 0.0, 0.0};
  m.structure.g.m = Mat3d::diag(1.0, 1.0, -1.0);
  m.brackets.set(1, 2, Vec3d{0.0, c1, c2});
  m.connection = koszul_connection(m.structure.g.m, m.brackets);
  m.lie_params = {c1, c2};
  return detail::finish_model(std::move(m));
}

// Same structure tensors as the Lie model but with caller-supplied brackets.
// Exists for classification experiments with perturbed structure constants.
inline Model lie_model_with_brackets(const Bracketsd& br) {
  Model m = lie_group_model(1.0, 1.0);
  m.name = "lie-custom";
  m.lie_params.reset();
  m.brackets = br;
  m.connection = koszul_connection(m.structure.g.m, m.brackets);
  return detail::finish_model(std::move(m));
}

// Right-hand side of the F1 defining identity, with theta supplied:
//   1/2 { g(u,phi v) theta(phi w) + g(phi u,phi v) theta(phi^2 w)
//       + g(u,phi w) theta(phi v) + g(phi u,phi w) theta(phi^2 v) }.
inline double f1_identity_rhs(const Model& m, const Vec3d& u, const Vec3d& v,
                              const Vec3d& w, const Vec3d& theta) {
  auto th = [&](const Vec3d& x) { return dot(theta, x); };
  const Vec3d pu = m.phi_of(u), pv = m.phi_of(v), pw = m.phi_of(w);
  return 0.5 * (m.g().eval(u, pv) * th(pw) + m.g().eval(pu, pv) * th(m.phi_of(pw)) +
                m.g().eval(u, pw) * th(pv) + m.g().eval(pu, pw) * th(m.phi_of(pv)));
}

struct ClassReport {
  ManifoldClass cls = ManifoldClass::neither;
  double f0_residual = 0.0;   // max |F| over the basis-triple grid
  double f1_residual = 0.0;   // max |F - F1 identity| over the grid
  double xi_residual = 0.0;   // max |nabla_i xi|
  double tol = 1e-8;
};

// Deterministic classification over the 27 basis triples.
inline ClassReport classify(const Model& m, double tol = 1e-8) {
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  ClassReport rep;
  rep.tol = tol;
  const Vec3d theta = lee_forms(m).theta;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec3d u = basis_vec(i), v = basis_vec(j), w = basis_vec(k);
        const double f = tensor_F(m, u, v, w);
        rep.f0_residual = std::max(rep.f0_residual, std::abs(f));
        rep.f1_residual = std::max(
            rep.f1_residual, std::abs(f - f1_identity_rhs(m, u, v, w, theta)));
      }
  for (std::size_t i = 0; i < 3; ++i)
    rep.xi_residual =
        std::max(rep.xi_residual, linf(m.connection.gamma(basis_vec(i), m.xi())));

  if (rep.f0_residual < tol)
    rep.cls = ManifoldClass::F0;
  else if (rep.f1_residual < tol && rep.xi_residual < tol)
    rep.cls = ManifoldClass::F1;
  else
    rep.cls = ManifoldClass::neither;
  return rep;
}

// Plain-text model config: one "key = value" per line, keys model|c1|c2,
// '#' comments allowed. Unknown keys are errors.
inline Model model_from_config(std::string_view text) {
  std::string model_name = "flat";
  double c1 = 1.0, c2 = 1.0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "model") {
      if (value != "flat" && value != "lie")
        throw std::invalid_argument("config: model must be flat or lie");
      model_name = value;
    } else if (key == "c1" || key == "c2") {
      std::size_t pos = 0;
      double parsed = 0.0;
      try {
        parsed = std::stod(value, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != value.size())
        throw std::invalid_argument("config: bad numeric value for " + key);
      (key == "c1" ? c1 : c2) = parsed;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return model_name == "flat" ? flat_cosymplectic_model()
                              : lie_group_model(c1, c2);
}

}  // namespace nullframe
