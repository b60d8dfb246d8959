#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "nullframe/b_solver.hpp"
#include "nullframe/frenet.hpp"
#include "nullframe/lie_example.hpp"

namespace nullframe::io {

using json = nlohmann::json;

// 17 significant digits: enough to round-trip any double.
inline std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string frame_csv(const FrenetFrame& frame,
                             const CurvatureData& curv) {
  std::string out =
      "t,Cdot_0,Cdot_1,Cdot_2,N_0,N_1,N_2,W_0,W_1,W_2,h,k1,k2,gram_residual\n";
  for (std::size_t i = 0; i < frame.samples.size(); ++i) {
    const FrameSample& s = frame.samples[i];
    const CurvatureSample& c = curv.samples[i];
    out += g17(s.t);
    for (std::size_t k = 0; k < 3; ++k) out += "," + g17(s.Cdot[k]);
    for (std::size_t k = 0; k < 3; ++k) out += "," + g17(s.N[k]);
    for (std::size_t k = 0; k < 3; ++k) out += "," + g17(s.W[k]);
    out += "," + g17(c.h) + "," + g17(c.k1) + "," + g17(c.k2) + "," +
           g17(s.gram_residual) + "\n";
  }
  return out;
}

inline std::string curvature_csv(const CurvatureData& curv) {
  std::string out = "t,h,k1,k2\n";
  for (const auto& c : curv.samples)
    out += g17(c.t) + "," + g17(c.h) + "," + g17(c.k1) + "," + g17(c.k2) + "\n";
  return out;
}

inline std::string b_solution_csv(const BSolution& num, double a, double u) {
  std::string out = "t,b_numeric,b_analytic,diff\n";
  for (std::size_t i = 0; i < num.t.size(); ++i) {
    const double ana = analytic_b_F0(a, u, num.t[i]);
    out += g17(num.t[i]) + "," + g17(num.b[i]) + "," + g17(ana) + "," +
           g17(num.b[i] - ana) + "\n";
  }
  return out;
}

inline json vec_json(const Vec3d& v) { return json::array({v[0], v[1], v[2]}); }

inline json frame_json(const FrenetFrame& frame, const CurvatureData& curv,
                       const CartanReport& cartan) {
  json samples = json::array();
  for (std::size_t i = 0; i < frame.samples.size(); ++i) {
    const FrameSample& s = frame.samples[i];
    const CurvatureSample& c = curv.samples[i];
    samples.push_back({{"t", s.t},
                       {"Cdot", vec_json(s.Cdot)},
                       {"N", vec_json(s.N)},
                       {"W", vec_json(s.W)},
                       {"h", c.h},
                       {"k1", c.k1},
                       {"k2", c.k2},
                       {"gram_residual", s.gram_residual}});
  }
  return {{"a", frame.a},
          {"positive_orientation", frame.positive_orientation},
          {"samples", samples},
          {"summary",
           {{"max_gram_residual", frame.max_gram_residual()},
            {"max_k1_dev", cartan.max_k1_dev},
            {"max_h_abs", cartan.max_h_abs},
            {"tau_mean", cartan.tau_mean},
            {"cartan_pass", cartan.pass},
            {"max_eq_residual",
             std::max({cartan.max_eq1, cartan.max_eq2, cartan.max_eq3})}}}};
}

// Matrix as exact "num/den" strings side by side with floats.
inline json rational_matrix_json(const Mat3<Rational>& m) {
  json exact = json::array(), flt = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json erow = json::array(), frow = json::array();
    for (std::size_t j = 0; j < 3; ++j) {
      erow.push_back(m(i, j).str());
      frow.push_back(m(i, j).to_double());
    }
    exact.push_back(erow);
    flt.push_back(frow);
  }
  return {{"exact", exact}, {"float", flt}};
}

inline json float_matrix_json(const Mat3d& m) {
  json flt = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(m(i, j));
    flt.push_back(row);
  }
  return flt;
}

inline json lie_rep_json(const LieSlantVectorExact& v,
                         const std::vector<double>& ts) {
  const LieMatrixRep<Rational> rep = lie_matrix_rep(v);
  json out = {{"c", v.c.to_double()},
              {"a", v.a.to_double()},
              {"X", {{"exact", json::array({v.X[0].str(), v.X[1].str(), v.X[2].str()})},
                     {"float", json::array({v.X[0].to_double(), v.X[1].to_double(),
                                            v.X[2].to_double()})}}},
              {"b", {{"exact", v.b.str()}, {"float", v.b.to_double()}}},
              {"tau", {{"exact", v.tau.str()}, {"float", v.tau.to_double()}}},
              {"pi_E0", rational_matrix_json(rep.pi_E0)},
              {"pi_E1", rational_matrix_json(rep.pi_E1)},
              {"pi_E2", rational_matrix_json(rep.pi_E2)},
              {"pi_X", rational_matrix_json(rep.pi_X)},
              {"pi_phiX", rational_matrix_json(rep.pi_phiX)},
              {"pi_N1", rational_matrix_json(rep.pi_N1)},
              {"pi_W1", rational_matrix_json(rep.pi_W1)}};
  json curves = json::array();
  const LieSlantVector vd = to_double(v);
  for (double t : ts)
    curves.push_back({{"t", t}, {"Pi_C", float_matrix_json(group_curve(vd, t))}});
  out["group_curve"] = curves;
  return out;
}

}  // namespace nullframe::io
