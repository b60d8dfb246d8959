#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nullframe/models.hpp"

using namespace nullframe;

namespace {

// Independent oracle: solve each Koszul system by Gaussian elimination with
// partial pivoting instead of the closed-form inverse used in production.
Vec3d gauss_solve(Mat3d a, Vec3d rhs) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    std::swap(a.m[col], a.m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    REQUIRE(std::abs(a(col, col)) > 1e-14);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a(r, col) / a(col, col);
      for (int c = col; c < 3; ++c) a(r, c) -= f * a(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  Vec3d x;
  for (int r = 2; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < 3; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }
  return x;
}

ConnectionModel koszul_oracle(const Metric3& g, const Bracketsd& br) {
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  ConnectionModel out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec3d rhs;
      for (std::size_t k = 0; k < 3; ++k)
        rhs[k] = 0.5 * (g.eval(br.of(i, j), basis_vec(k)) -
                        g.eval(br.of(j, k), basis_vec(i)) +
                        g.eval(br.of(k, i), basis_vec(j)));
      out.coeff[i][j] = gauss_solve(g.m, rhs);
    }
  return out;
}

double conn_diff(const ConnectionModel& a, const ConnectionModel& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out = std::max(out, linf(a.of(i, j) - b.of(i, j)));
  return out;
}

}  // namespace

TEST_CASE("koszul connection agrees with the linear-system oracle") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double c1 = dist(rng), c2 = dist(rng);
    if (c1 == 0.0 && c2 == 0.0) continue;
    const Model m = lie_group_model(c1, c2);
    CHECK(conn_diff(m.connection, koszul_oracle(m.g(), m.brackets)) < 1e-13);
  }

  // arbitrary perturbed brackets go through the same formula
  Bracketsd br;
  br.set(0, 1, Vec3d{0, 0, 1});
  br.set(1, 2, Vec3d{0, 1, 1});
  const Model p = lie_model_with_brackets(br);
  CHECK(conn_diff(p.connection, koszul_oracle(p.g(), p.brackets)) < 1e-13);
}

TEST_CASE("lie connection closed form") {
  const double c1 = 0.8, c2 = -1.7;
  const Model m = lie_group_model(c1, c2);
  // nabla_E1 E1 = c1 E2, nabla_E1 E2 = c1 E1,
  // nabla_E2 E1 = -c2 E2, nabla_E2 E2 = -c2 E1
  CHECK(linf(m.connection.of(1, 1) - Vec3d{0, 0, c1}) == 0.0);
  CHECK(linf(m.connection.of(1, 2) - Vec3d{0, c1, 0}) == 0.0);
  CHECK(linf(m.connection.of(2, 1) - Vec3d{0, 0, -c2}) == 0.0);
  CHECK(linf(m.connection.of(2, 2) - Vec3d{0, -c2, 0}) == 0.0);
  // nabla along or of E0 vanishes: the Reeb field is parallel
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(linf(m.connection.of(0, i)) == 0.0);
    CHECK(linf(m.connection.of(i, 0)) == 0.0);
  }
}

TEST_CASE("lie model rejects zero parameters") {
  CHECK_THROWS_AS(lie_group_model(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("connection residual invariants") {
  for (const Model& m :
       {flat_cosymplectic_model(), lie_group_model(1.0, 1.0),
        lie_group_model(-0.3, 2.0)}) {
    CHECK(metric_compat_residual(m.g(), m.connection) < 1e-12);
    CHECK(torsion_residual(m.connection, m.brackets) < 1e-12);
  }
  // flat model: all 27 coefficients are zero
  const Model flat = flat_cosymplectic_model();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(linf(flat.connection.of(i, j)) == 0.0);
}

TEST_CASE("covariant derivative") {
  const Model flat = flat_cosymplectic_model();
  const Vec3d deriv{0.3, -1.0, 2.0};
  CHECK(linf(covariant_derivative(flat.connection, {1, 2, 3}, {4, 5, 6}, deriv) -
             deriv) == 0.0);

  // nabla_X X for constant X = (p,q,r):
  //   ( (qr) c1 - r^2 c2 ) E1 + ( q^2 c1 - (qr) c2 ) E2
  const double c1 = 1.3, c2 = -0.4;
  const Model lie = lie_group_model(c1, c2);
  const double p = 0.7, q = -1.9, r = 2.2;
  const Vec3d x{p, q, r};
  const Vec3d got = covariant_derivative(lie.connection, x, x, Vec3d{});
  const Vec3d want{0.0, q * r * c1 - r * r * c2, q * q * c1 - q * r * c2};
  CHECK(linf(got - want) < 1e-14);

  // along E0 every left-invariant field is parallel
  CHECK(linf(lie.connection.gamma({1, 0, 0}, {3.0, -2.0, 5.0})) == 0.0);
}

TEST_CASE("tensor F") {
  const Model flat = flat_cosymplectic_model();
  auto basis_vec = [](std::size_t i) {
    Vec3d v;
    v[i] = 1.0;
    return v;
  };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(tensor_F(flat, basis_vec(i), basis_vec(j), basis_vec(k)) == 0.0);

  const double c1 = 1.1, c2 = -0.6;
  const Model lie = lie_group_model(c1, c2);
  const Vec3d e1 = basis_vec(1);
  CHECK(tensor_F(lie, e1, e1, e1) == Catch::Approx(2.0 * c1).margin(1e-14));

  // F(u,v,w) = F(u,w,v) and F agrees with the F1 identity on all triples
  const Vec3d theta = lee_forms(lie).theta;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Vec3d u = basis_vec(i), v = basis_vec(j), w = basis_vec(k);
        CHECK(tensor_F(lie, u, v, w) ==
              Catch::Approx(tensor_F(lie, u, w, v)).margin(1e-10));
        CHECK(tensor_F(lie, u, v, w) ==
              Catch::Approx(f1_identity_rhs(lie, u, v, w, theta)).margin(1e-10));
      }

  // F(u, v, xi) = 0 since the Reeb field is parallel: both sides of
  // F(X, phi Y, xi) = g(nabla_X xi, Y) vanish.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const Vec3d u{dist(rng), dist(rng), dist(rng)};
    const Vec3d v{dist(rng), dist(rng), dist(rng)};
    CHECK(std::abs(tensor_F(lie, u, v, lie.xi())) < 1e-12);
    CHECK(std::abs(tensor_F(lie, u, lie.phi_of(v), lie.xi()) -
                   lie.g().eval(lie.connection.gamma(u, lie.xi()), v)) < 1e-12);
  }
}

TEST_CASE("lee forms") {
  const LeeForms flat = lee_forms(flat_cosymplectic_model());
  CHECK(linf(flat.theta) == 0.0);
  CHECK(linf(flat.theta_star) == 0.0);
  CHECK(linf(flat.omega) == 0.0);

  const double c1 = 0.9, c2 = 1.4;
  const LeeForms lie = lee_forms(lie_group_model(c1, c2));
  CHECK(lie.theta[1] == Catch::Approx(2.0 * c1).margin(1e-13));
  CHECK(lie.theta[2] == Catch::Approx(2.0 * c2).margin(1e-13));
  CHECK(std::abs(lie.theta[0]) < 1e-14);  // theta(xi) = 0
  CHECK(linf(lie.omega) < 1e-14);
}

TEST_CASE("model stores theta recomputed from F") {
  const double c1 = -0.5, c2 = 0.25;
  const Model m = lie_group_model(c1, c2);
  CHECK(m.theta_of(Vec3d{0, 1, 0}) / 2.0 == Catch::Approx(c1).margin(1e-13));
  CHECK(m.theta_of(Vec3d{0, 0, 1}) / 2.0 == Catch::Approx(c2).margin(1e-13));
  CHECK(std::abs(m.theta_of(m.xi())) < 1e-14);
}

TEST_CASE("classification") {
  const ClassReport flat = classify(flat_cosymplectic_model());
  CHECK(flat.cls == ManifoldClass::F0);
  CHECK(flat.f0_residual < 1e-12);

  const ClassReport lie = classify(lie_group_model(1.0, 1.0));
  CHECK(lie.cls == ManifoldClass::F1);
  CHECK(lie.f1_residual < 1e-10);
  CHECK(lie.xi_residual < 1e-12);
  CHECK(lie.f0_residual > 1.0);  // genuinely not F0

  // perturbing the brackets to [E0,E1] = E2 breaks the parallel Reeb field
  Bracketsd br;
  br.set(0, 1, Vec3d{0, 0, 1});
  br.set(1, 2, Vec3d{0, 1, 1});
  const ClassReport pert = classify(lie_model_with_brackets(br));
  CHECK(pert.cls == ManifoldClass::neither);
  CHECK(pert.xi_residual > 0.1);
}

TEST_CASE("model config parsing") {
  const Model flat = model_from_config("model = flat\n");
  CHECK(flat.name == "flat");

  const Model lie = model_from_config("# comment\nmodel = lie\nc1 = 2.5\nc2 = -1\n");
  REQUIRE(lie.lie_params.has_value());
  CHECK(lie.lie_params->first == 2.5);
  CHECK(lie.lie_params->second == -1.0);

  CHECK_THROWS_AS(model_from_config("model = torus\n"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_config("c1 = abc\nmodel = lie\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(model_from_config("frobnicate = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_config("model = lie\nc1 = 0\nc2 = 0\n"),
                  std::invalid_argument);
}
