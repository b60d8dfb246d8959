// Acceptance suite: prints one line per criterion, exits 0 only if all pass.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nullframe/nullframe.hpp"

using namespace nullframe;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, bool ok,
               const std::string& detail = "") {
  std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

// Independent frame-relation oracle over the abstract Gram matrix of
// {C', xi, phi C'}.
double gram_oracle_residual(double a, double b, const FrameCoefficients& f) {
  Mat3d G = Mat3d::zero();
  G(0, 1) = G(1, 0) = a;
  G(0, 2) = G(2, 0) = b;
  G(1, 1) = 1.0;
  G(2, 2) = a * a;
  const Vec3d W{f.beta, f.alpha, f.gamma};
  const Vec3d N{f.mu, f.lambda, f.nu};
  const Vec3d C{1.0, 0.0, 0.0};
  double r = std::abs(dot(C, G * N) - 1.0);
  r = std::max(r, std::abs(dot(W, G * W) - 1.0));
  r = std::max(r, std::abs(dot(N, G * N)));
  r = std::max(r, std::abs(dot(N, G * W)));
  r = std::max(r, std::abs(dot(C, G * W)));
  return r;
}

// Scaling-and-squaring Taylor exponential oracle.
Mat3d expm_series(const Mat3d& a) {
  int squarings = 0;
  double scale = linf(a);
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat3d as = (1.0 / std::pow(2.0, squarings)) * a;
  Mat3d term = Mat3d::identity();
  Mat3d sum = Mat3d::identity();
  for (int k = 1; k <= 24; ++k) {
    term = (1.0 / k) * (term * as);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

void check_1_structure_axioms() {
  bool ok = true;
  std::string detail;
  for (const Model& m : {flat_cosymplectic_model(), lie_group_model(1.0, 1.0)}) {
    const StructureReport rep = check_structure(m.structure, 1e-10);
    ok = ok && rep.pass();
    detail += m.name + " max residual " + fmt(rep.max_residual()) + "; ";
  }
  const ClassReport flat_cls = classify(flat_cosymplectic_model());
  const ClassReport lie_cls = classify(lie_group_model(1.0, 1.0));
  ok = ok && flat_cls.cls == ManifoldClass::F0;
  ok = ok && lie_cls.cls == ManifoldClass::F1 && lie_cls.f1_residual < 1e-8 &&
       lie_cls.xi_residual < 1e-12;
  detail += "flat=" + std::string(to_string(flat_cls.cls)) +
            " lie=" + to_string(lie_cls.cls);
  criterion(1, "structure axioms and classification", ok, detail);
}

void check_2_frame_property() {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> a_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> b_dist(-10.0, 10.0);
  std::uniform_real_distribution<double> beta_dist(-5.0, 5.0);
  double worst = 0.0;
  int done = 0;
  while (done < 1000) {
    const double a = a_dist(rng);
    if (std::abs(a) < 0.1) continue;
    ++done;
    const double b = b_dist(rng);
    const auto f = general_frame_coefficients(a, b, beta_dist(rng));
    worst = std::max(worst, gram_oracle_residual(a, b, f));
  }
  criterion(2, "frame relations on 1000 random (a, b, beta)", worst < 1e-9,
            "worst residual " + fmt(worst));
}

void check_3_distinguished_parameter() {
  const Model flat = flat_cosymplectic_model();
  const CurveRep curve =
      MinkowskiCartanCurve(MinkowskiCartanCurve::Branch::C1, 1.0, 0.0)
          .as_curve(-1.0, 1.0, 201);

  const FrenetFrame frame = unique_distinguished_frame(curve, flat);
  const CurvatureData curv = curvatures(curve, flat, frame);
  double max_h = 0.0;
  for (const auto& c : curv.samples) max_h = std::max(max_h, std::abs(c.h));

  const FrenetFrame perturbed = general_frame(curve, flat, distinguished_beta(0.1));
  const CurvatureData curv_p = curvatures(curve, flat, perturbed);
  double max_h_p = 0.0;
  for (const auto& c : curv_p.samples) max_h_p = std::max(max_h_p, std::abs(c.h));

  criterion(3, "unique distinguished frame on C1",
            max_h < 1e-6 && max_h_p > 1e-3,
            "|h| <= " + fmt(max_h) + ", perturbed max |h| " +
                fmt(max_h_p));
}

void check_4_cartan_reproduction() {
  const Model flat = flat_cosymplectic_model();
  bool ok = true;
  std::string detail;
  for (auto branch :
       {MinkowskiCartanCurve::Branch::C1, MinkowskiCartanCurve::Branch::C2})
    for (auto [a, u] : {std::pair{1.0, 0.0}, {2.0, 0.3}, {-1.0, 0.0}}) {
      const MinkowskiCartanCurve mc(branch, a, u);
      const CurveRep curve = mc.as_curve(-1.0, 1.0, 201);
      const FrenetFrame frame = unique_distinguished_frame(curve, flat);
      const CurvatureData curv = curvatures(curve, flat, frame);
      const CartanReport rep = verify_cartan(curve, flat, frame, curv, 1e-6, 1e-5);

      const double tau_want = -1.0 / (2.0 * a * a);
      double tau_dev = 0.0, b_dev = 0.0;
      for (const auto& c : curv.samples)
        tau_dev = std::max(tau_dev, std::abs(c.k2 - tau_want));
      const BSamples bs = compute_b(curve, flat);
      for (std::size_t i = 0; i < bs.t.size(); ++i)
        b_dev = std::max(b_dev, std::abs(bs.b[i] - analytic_b_F0(a, u, bs.t[i])));

      const bool this_ok = rep.max_k1_dev < 1e-6 && rep.max_h_abs < 1e-6 &&
                           tau_dev < 1e-6 && rep.max_eq1 < 1e-5 &&
                           rep.max_eq2 < 1e-5 && rep.max_eq3 < 1e-5 &&
                           b_dev < 1e-10;
      if (!this_ok)
        detail += (branch == MinkowskiCartanCurve::Branch::C1 ? "C1" : "C2") +
                  std::string("(a=") + std::to_string(a) + ") ";
      ok = ok && this_ok;
    }
  criterion(4, "Cartan reproduction on C1/C2 for (a,u) in {(1,0),(2,0.3),(-1,0)}",
            ok, detail.empty() ? "k1, h, tau, equations, b all within tolerance"
                               : "failed: " + detail);
}

void check_5_exact_fixed_point() {
  const auto v = make_lie_slant_vector(Rational(1), Rational(2));
  const auto conn = lie_koszul(v.c, v.c);
  const Mat3<Rational> g =
      Mat3<Rational>::diag(Rational(1), Rational(1), Rational(-1));

  bool ok = v.X == Vec3<Rational>{Rational(2), Rational(15, 4), Rational(17, 4)};
  ok = ok && v.b == Rational(-255, 8);
  const Vec3<Rational> accel = conn.gamma(v.X, v.X);
  ok = ok && accel == v.W1;
  ok = ok && dot(accel, g * v.W1) == Rational(1);  // k1 = 1 exactly
  ok = ok && dot(accel, g * v.N1) == Rational(0);  // h = 0 exactly
  const Vec3<Rational> dn = conn.gamma(v.X, v.N1);
  ok = ok && dn == v.tau * v.W1 && v.tau == Rational(-1, 8);
  ok = ok && v.cartan_condition_residual() == Rational(0);
  criterion(5, "exact rational fixed point (c=1, a=2)", ok,
            "X=(2,15/4,17/4), b=-255/8, D_X X = W1, tau=-1/8");
}

void check_6_matrix_representation() {
  const auto v = make_lie_slant_vector(Rational(1), Rational(2));
  const auto rep = lie_matrix_rep(v);
  const Rational c = v.c, a = v.a;
  const Rational ca4 = c * c * a * a * a * a;
  const Rational two_a = Rational(2) * a;

  auto block = [](Rational top, Rational bottom) {
    Mat3<Rational> m = Mat3<Rational>::zero();
    m(1, 1) = m(1, 2) = top;
    m(2, 1) = m(2, 2) = bottom;
    return m;
  };
  const auto want_X = block((ca4 + Rational(1)) / two_a, (Rational(1) - ca4) / two_a);
  const auto want_phiX =
      block((ca4 - Rational(1)) / two_a, (ca4 + Rational(1)) / two_a);
  const Rational four_a3 = Rational(4) * a * a * a;
  const auto want_N1 =
      block(-((ca4 + Rational(1)) / four_a3), (ca4 - Rational(1)) / four_a3);
  const Rational two_a2 = Rational(2) * a * a;
  const auto want_W1 =
      block((Rational(1) - ca4) / two_a2, (Rational(1) + ca4) / two_a2);

  bool ok = rep.pi_X == want_X && rep.pi_phiX == want_phiX &&
            rep.pi_N1 == want_N1 && rep.pi_W1 == want_W1;

  const auto repd = lie_matrix_rep(make_lie_slant_vector(1.0, 2.0));
  double worst_exp = 0.0;
  for (double t : {-1.0, 0.5, 3.0})
    worst_exp = std::max(worst_exp, linf(group_exponential(t * repd.pi_X) -
                                         expm_series(t * repd.pi_X)));
  ok = ok && worst_exp < 1e-10;

  const LieSlantVector vd = make_lie_slant_vector(1.0, 2.0);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double worst_grp = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double s = dist(rng), t = dist(rng);
    worst_grp = std::max(worst_grp, linf(group_curve(vd, s) * group_curve(vd, t) -
                                         group_curve(vd, s + t)));
  }
  ok = ok && worst_grp < 1e-10;
  criterion(6, "matrix representation and group exponential", ok,
            "exp oracle dev " + fmt(worst_exp) + ", subgroup dev " +
                fmt(worst_grp));
}

void check_7_b_ode() {
  bool ok = true;
  double worst = 0.0;
  for (double a : {1.0, 2.0, -1.0, 0.5}) {
    BOdeProblem p;
    p.a = a;
    p.b0 = analytic_b_F0(a, 0.0, 0.0);
    p.t0 = 0.0;
    p.t1 = 1.0;
    p.step = 1e-3;
    const BSolution sol = solve_b_numeric(p);
    for (std::size_t i = 0; i < sol.t.size(); ++i)
      worst = std::max(worst, std::abs(sol.b[i] - analytic_b_F0(a, 0.0, sol.t[i])));
  }
  ok = worst < 1e-7;

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double worst_u = 0.0;
  for (int i = 0; i < 200; ++i) {
    double a = dist(rng);
    if (std::abs(a) < 0.1) continue;
    const double u = dist(rng), t = dist(rng);
    worst_u = std::max(worst_u,
                       std::abs(invert_b_for_u(a, t, analytic_b_F0(a, u, t)) - u));
  }
  ok = ok && worst_u < 1e-10;
  criterion(7, "b-ODE matches the analytic solution; u inversion round-trips", ok,
            "ode dev " + fmt(worst) + ", u dev " + fmt(worst_u));
}

void check_8_geodesic_criterion() {
  const Model flat = flat_cosymplectic_model();
  bool ok = true;

  // straight null lines: constant null slant tangents
  for (const Vec3d dir : {Vec3d{1.0, 0.0, 1.0}, Vec3d{std::sqrt(2.0), 1.0, 1.0}}) {
    const CurveRep line = CurveRep::analytic(
        [dir](double t) { return t * dir; }, [dir](double) { return dir; },
        -1.0, 1.0, 51);
    const GeodesicReport rep = geodesic_test(line, flat);
    ok = ok && rep.geodesic && rep.max_residual < 1e-10;
    const FrenetFrame frame = general_frame(line, flat, constant_beta(0.0));
    const CurvatureData curv = curvatures(line, flat, frame);
    for (const auto& c : curv.samples) ok = ok && std::abs(c.k1) < 1e-10;
  }

  // C1 is not geodesic and the residual equals (2/a) sqrt(a^4 + b^2)
  const double a = 1.0, u = 0.0;
  const CurveRep c1 =
      MinkowskiCartanCurve(MinkowskiCartanCurve::Branch::C1, a, u)
          .as_curve(-1.0, 1.0, 201);
  const GeodesicReport rep = geodesic_test(c1, flat);
  ok = ok && !rep.geodesic;
  const BSamples bs = compute_b(c1, flat);
  double dev = 0.0;
  for (std::size_t i = 0; i < bs.t.size(); ++i) {
    const double want =
        (2.0 / a) * std::sqrt(a * a * a * a + bs.b[i] * bs.b[i]);
    dev = std::max(dev, std::abs(rep.residuals[i] - want));
  }
  ok = ok && dev < 1e-6;
  criterion(8, "geodesic criterion", ok,
            "C1 residual deviation " + fmt(dev));
}

void check_9_direct_vs_closed_form() {
  const Model flat = flat_cosymplectic_model();
  double worst = 0.0;
  for (auto branch :
       {MinkowskiCartanCurve::Branch::C1, MinkowskiCartanCurve::Branch::C2})
    for (auto [a, u] : {std::pair{1.0, 0.0}, {2.0, 0.3}, {-1.0, 0.0}}) {
      const CurveRep curve =
          MinkowskiCartanCurve(branch, a, u).as_curve(-1.0, 1.0, 201);
      const FrenetFrame frame = unique_distinguished_frame(curve, flat);
      const CurvatureData curv = curvatures(curve, flat, frame);
      worst = std::max({worst, curv.max_closed_form_dev_h,
                        curv.max_closed_form_dev_k1});
    }
  const Model lie = lie_group_model(1.0, 1.0);
  const LieSlantVector v = make_lie_slant_vector(1.0, 2.0);
  const CurveRep lcurve = CurveRep::left_invariant(v.X, -1.0, 1.0, 51);
  const FrenetFrame lframe = unique_distinguished_frame(lcurve, lie);
  const CurvatureData lcurv = curvatures(lcurve, lie, lframe);
  worst = std::max({worst, lcurv.max_closed_form_dev_h,
                    lcurv.max_closed_form_dev_k1});
  criterion(9, "direct inner products vs closed-form h, k1", worst < 1e-6,
            "worst deviation " + fmt(worst));
}

}  // namespace

int main() {
  check_1_structure_axioms();
  check_2_frame_property();
  check_3_distinguished_parameter();
  check_4_cartan_reproduction();
  check_5_exact_fixed_point();
  check_6_matrix_representation();
  check_7_b_ode();
  check_8_geodesic_criterion();
  check_9_direct_vs_closed_form();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 acceptance criteria passed\n");
  return 0;
}
