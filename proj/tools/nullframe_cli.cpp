// Command-line front end: builds the two manifold models and the example
// slant null curves, runs the verification suites, solves the b-ODE, and
// emits frames/curvatures/matrices as CSV, JSON, or text.
//
// Exit codes: 0 pass, 1 verification failure, 2 bad configuration,
// 3 geodesic curve, 4 zero slant constant, 5 non-finite integration,
// 6 excluded Lie parameters (orientation domain or degenerate b).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullframe/io.hpp"
#include "nullframe/minkowski.hpp"
#include "nullframe/nullframe.hpp"

namespace nf = nullframe;

namespace {

struct Options {
  std::string model = "flat";
  double c1 = 1.0, c2 = 1.0;
  std::string curve;  // c1 | c2 | lie | custom-samples-file (default per model)
  std::string samples_file;
  double a = 1.0, u = 0.0;
  std::vector<double> offsets{0.0, 0.0, 0.0};
  double t0 = -1.0, t1 = 1.0;
  int samples = 201;
  double b0 = 0.0, step = 1e-3;
  double theta_c = 0.0, theta_phic = 0.0;
  std::vector<double> t_values;
  std::string output;  // csv | json | text (default per command)
  std::string out_path;
  double tol_structure = 1e-10;
  double tol_class = 1e-8;
  double tol_cert = 1e-8;
  double tol_cartan_scalar = 1e-6;
  double tol_cartan_vector = 1e-5;
  double tol_geodesic = 1e-8;
  bool c2_given = false;
};

void validate(const Options& o) {
  if (!(o.t0 < o.t1)) throw CLI::ValidationError("--t0 must be below --t1");
  if (o.samples < 3) throw CLI::ValidationError("--samples must be >= 3");
  for (double tol : {o.tol_structure, o.tol_class, o.tol_cert,
                     o.tol_cartan_scalar, o.tol_cartan_vector, o.tol_geodesic})
    if (!(tol > 0.0)) throw CLI::ValidationError("tolerances must be positive");
  if (!(o.step > 0.0)) throw CLI::ValidationError("--step must be positive");
}

void write_output(const Options& o, const std::string& payload) {
  if (o.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot open " + o.out_path);
  out << payload;
}

nf::Model make_model(const Options& o) {
  if (o.model == "flat") return nf::flat_cosymplectic_model();
  return nf::lie_group_model(o.c1, o.c2);
}

// Exact dyadic rational from a double; small denominators for the usual
// integer / half / quarter CLI inputs, overflow for anything wilder.
nf::Rational rational_from_double(double x) {
  if (x == 0.0) return nf::Rational(0);
  int exp = 0;
  const double m = std::frexp(x, &exp);
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));  // |m| in [2^52, 2^53)
  int shift = exp - 53;
  nf::Rational r(mant);
  const nf::Rational two(2);
  for (; shift > 0; --shift) r *= two;
  for (; shift < 0; ++shift) r /= two;
  return r;
}

struct ResolvedCurve {
  nf::Model model;
  nf::CurveRep curve;
  std::optional<nf::MinkowskiCartanCurve> minkowski;
  std::optional<nf::LieSlantVector> lie;
};

ResolvedCurve resolve_curve(const Options& o) {
  std::string kind = o.curve;
  if (kind.empty()) kind = o.model == "lie" ? "lie" : "c1";

  if (kind == "c1" || kind == "c2") {
    if (o.model != "flat")
      throw CLI::ValidationError("curves c1/c2 live on the flat model");
    const auto branch = kind == "c1" ? nf::MinkowskiCartanCurve::Branch::C1
                                     : nf::MinkowskiCartanCurve::Branch::C2;
    const nf::Vec3d offs{o.offsets[0], o.offsets[1], o.offsets[2]};
    nf::MinkowskiCartanCurve mc(branch, o.a, o.u, offs);
    return {nf::flat_cosymplectic_model(),
            mc.as_curve(o.t0, o.t1, o.samples), mc, std::nullopt};
  }
  if (kind == "lie") {
    if (o.c2_given && o.c2 != o.c1)
      throw CLI::ValidationError("the lie curve needs equal parameters c1 = c2");
    const nf::LieSlantVector v = nf::make_lie_slant_vector(o.c1, o.a);
    return {nf::lie_group_model(o.c1, o.c1),
            nf::CurveRep::left_invariant(v.X, o.t0, o.t1, o.samples),
            std::nullopt, v};
  }
  if (kind == "custom-samples-file") {
    if (o.samples_file.empty())
      throw CLI::ValidationError("custom-samples-file needs a csv path");
    std::ifstream in(o.samples_file);
    if (!in) throw CLI::ValidationError("cannot read " + o.samples_file);
    return {nf::flat_cosymplectic_model(), nf::load_curve_csv(in), std::nullopt,
            std::nullopt};
  }
  throw CLI::ValidationError("unknown curve '" + kind + "'");
}

std::string pass_str(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_verify_structure(const Options& o) {
  const nf::Model model = make_model(o);
  const nf::StructureReport rep = nf::check_structure(model.structure, o.tol_structure);
  const nf::ClassReport cls = nf::classify(model, o.tol_class);

  std::cout << "structure verification: model " << model.name << "\n";
  for (const auto& ax : rep.axioms)
    std::cout << "  " << pass_str(ax.pass) << "  " << ax.name << "  residual "
              << nf::io::g17(ax.residual) << "  tol " << nf::io::g17(o.tol_structure)
              << "\n";
  std::cout << "  class " << nf::to_string(cls.cls) << "  (F0 residual "
            << nf::io::g17(cls.f0_residual) << ", F1 residual "
            << nf::io::g17(cls.f1_residual) << ", parallel-Reeb residual "
            << nf::io::g17(cls.xi_residual) << ")\n";
  std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
  return rep.pass() ? 0 : 1;
}

int emit_frame_like(const Options& o, bool curvatures_only) {
  const ResolvedCurve rc = resolve_curve(o);
  const nf::FrenetFrame frame =
      nf::unique_distinguished_frame(rc.curve, rc.model, o.tol_cert);
  const nf::CurvatureData curv = nf::curvatures(rc.curve, rc.model, frame);
  const nf::CartanReport cartan =
      nf::verify_cartan(rc.curve, rc.model, frame, curv, o.tol_cartan_scalar,
                        o.tol_cartan_vector);

  std::string output = o.output.empty() ? "csv" : o.output;
  if (output == "csv") {
    write_output(o, curvatures_only ? nf::io::curvature_csv(curv)
                                    : nf::io::frame_csv(frame, curv));
  } else if (output == "json") {
    write_output(o, nf::io::frame_json(frame, curv, cartan).dump(2) + "\n");
  } else if (output == "text") {
    // summary only; the csv/json forms carry the per-sample data
  } else {
    throw CLI::ValidationError("unknown output '" + output + "'");
  }

  std::ostream& log = (output == "text" && o.out_path.empty()) ? std::cout : std::cerr;
  log << "a " << nf::io::g17(frame.a) << "  orientation "
      << (frame.positive_orientation ? "positive" : "flipped (a < 0)") << "\n"
      << "max gram residual " << nf::io::g17(frame.max_gram_residual()) << "\n"
      << "k1 max deviation from 1: " << nf::io::g17(cartan.max_k1_dev) << "\n"
      << "max |h|: " << nf::io::g17(cartan.max_h_abs) << "\n"
      << "tau mean " << nf::io::g17(cartan.tau_mean) << "\n"
      << "closed-form deviation h " << nf::io::g17(curv.max_closed_form_dev_h)
      << ", k1 " << nf::io::g17(curv.max_closed_form_dev_k1) << "\n"
      << "cartan " << pass_str(cartan.pass) << "\n";
  return cartan.pass ? 0 : 1;
}

int cmd_solve_b(const Options& o) {
  nf::BOdeProblem p;
  p.a = o.a;
  p.b0 = o.b0;
  p.t0 = o.t0;
  p.t1 = o.t1;
  p.step = o.step;
  const double tc = o.theta_c, tpc = o.theta_phic;
  p.theta_C = [tc](double) { return tc; };
  p.theta_phiC = [tpc](double) { return tpc; };
  const nf::BSolution sol = nf::solve_b_numeric(p);
  const double u = nf::invert_b_for_u(o.a, o.t0, o.b0);

  const std::string output = o.output.empty() ? "csv" : o.output;
  if (output == "csv") {
    write_output(o, nf::io::b_solution_csv(sol, o.a, u));
  } else if (output == "json") {
    nf::io::json doc = {{"a", o.a}, {"u", u}, {"t", sol.t}, {"b", sol.b}};
    write_output(o, doc.dump(2) + "\n");
  } else if (output != "text") {
    throw CLI::ValidationError("unknown output '" + output + "'");
  }

  double max_diff = 0.0;
  if (tc == 0.0 && tpc == 0.0)
    for (std::size_t i = 0; i < sol.t.size(); ++i)
      max_diff = std::max(max_diff,
                          std::abs(sol.b[i] - nf::analytic_b_F0(o.a, u, sol.t[i])));
  std::ostream& log = (output == "text" && o.out_path.empty()) ? std::cout : std::cerr;
  log << "u " << nf::io::g17(u) << "  max |numeric - analytic| "
      << nf::io::g17(max_diff) << "\n";
  return 0;
}

int cmd_lie_rep(const Options& o) {
  const nf::Rational c = rational_from_double(o.c1);
  const nf::Rational a = rational_from_double(o.a);
  const nf::LieSlantVectorExact v = nf::make_lie_slant_vector(c, a);
  const nf::io::json doc = nf::io::lie_rep_json(v, o.t_values);
  const std::string output = o.output.empty() ? "json" : o.output;
  if (output != "json")
    throw CLI::ValidationError("lie-rep only emits json");
  write_output(o, doc.dump(2) + "\n");
  return 0;
}

int cmd_report(const Options& o) {
  const nf::Model model = make_model(o);
  bool all = true;
  auto line = [&](bool ok, const std::string& what, double value, double tol) {
    all = all && ok;
    std::cout << pass_str(ok) << "  " << what << "  (value "
              << nf::io::g17(value) << ", tol " << nf::io::g17(tol) << ")\n";
  };

  const nf::StructureReport srep = nf::check_structure(model.structure, o.tol_structure);
  line(srep.pass(), "structure axioms [" + model.name + "]", srep.max_residual(),
       o.tol_structure);
  const nf::ClassReport cls = nf::classify(model, o.tol_class);
  const auto expected =
      model.name == "flat" ? nf::ManifoldClass::F0 : nf::ManifoldClass::F1;
  line(cls.cls == expected,
       std::string("classifies as ") + nf::to_string(expected),
       model.name == "flat" ? cls.f0_residual : cls.f1_residual, o.tol_class);

  const ResolvedCurve rc = resolve_curve(o);
  const nf::SlantNullCertificate cert =
      nf::slant_null_check(rc.curve, rc.model, o.tol_cert);
  line(cert.valid_for_frame(), "slant null certificate (a = " +
       nf::io::g17(cert.a) + ")",
       std::max(cert.max_null_residual, cert.max_slant_residual), o.tol_cert);

  const nf::FrenetFrame frame =
      nf::unique_distinguished_frame(rc.curve, rc.model, o.tol_cert);
  line(frame.max_gram_residual() < 1e-9, "frame relations", frame.max_gram_residual(),
       1e-9);
  if (!frame.positive_orientation)
    std::cout << "NOTE  orientation flipped: a < 0 makes gamma negative\n";

  const nf::CurvatureData curv = nf::curvatures(rc.curve, rc.model, frame);
  const nf::CartanReport cartan =
      nf::verify_cartan(rc.curve, rc.model, frame, curv, o.tol_cartan_scalar,
                        o.tol_cartan_vector);
  line(cartan.max_h_abs < o.tol_cartan_scalar, "distinguished parameter (h = 0)",
       cartan.max_h_abs, o.tol_cartan_scalar);
  line(cartan.max_k1_dev < o.tol_cartan_scalar, "k1 = 1", cartan.max_k1_dev,
       o.tol_cartan_scalar);
  const double tau_want = -1.0 / (2.0 * cert.a * cert.a);
  line(std::abs(cartan.tau_mean - tau_want) < o.tol_cartan_scalar,
       "tau = -1/(2 a^2)", cartan.tau_mean, o.tol_cartan_scalar);
  line(cartan.pass, "cartan equations",
       std::max({cartan.max_eq1, cartan.max_eq2, cartan.max_eq3}),
       o.tol_cartan_vector);

  const nf::GeodesicReport geo = nf::geodesic_test(rc.curve, rc.model, o.tol_geodesic);
  line(!geo.geodesic, "non-geodesic", geo.max_residual, o.tol_geodesic);

  const nf::CurvatureData& cv = curv;
  line(cv.max_closed_form_dev_k1 < o.tol_cartan_scalar,
       "direct vs closed-form k1", cv.max_closed_form_dev_k1, o.tol_cartan_scalar);

  if (rc.minkowski) {
    const nf::BSamples bs = nf::compute_b(rc.curve, rc.model);
    double worst = 0.0;
    for (std::size_t i = 0; i < bs.t.size(); ++i)
      worst = std::max(worst, std::abs(bs.b[i] - nf::analytic_b_F0(
                                                     rc.minkowski->a(),
                                                     rc.minkowski->u(), bs.t[i])));
    line(worst < 1e-10, "b(t) matches the F0 closed form", worst, 1e-10);
  }
  std::cout << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frenet frames and Cartan framings of slant null curves on "
               "almost contact B-metric 3-manifolds"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config");

  Options o;
  app.add_option("--model", o.model, "manifold model")
      ->check(CLI::IsMember({"flat", "lie"}))
      ->capture_default_str();
  app.add_option("--c1", o.c1, "Lie parameter c1 (also the lie-curve c)")
      ->capture_default_str();
  app.add_option("--c2", o.c2, "Lie parameter c2")->capture_default_str();
  app.add_option("--curve", o.curve, "c1 | c2 | lie | custom-samples-file");
  app.add_option("--samples-file", o.samples_file, "csv of t,x1,x2,x3 rows");
  app.add_option("file", o.samples_file, "positional samples file");
  app.add_option("--a", o.a, "slant constant")->capture_default_str();
  app.add_option("--u", o.u, "integration constant")->capture_default_str();
  app.add_option("--offsets", o.offsets, "curve offsets")->expected(3);
  app.add_option("--t0", o.t0)->capture_default_str();
  app.add_option("--t1", o.t1)->capture_default_str();
  app.add_option("--samples", o.samples)->capture_default_str();
  app.add_option("--b0", o.b0, "initial b for solve-b")->capture_default_str();
  app.add_option("--step", o.step, "RK4 step")->capture_default_str();
  app.add_option("--theta-c", o.theta_c, "constant theta(C')")->capture_default_str();
  app.add_option("--theta-phic", o.theta_phic, "constant theta(phi C')")
      ->capture_default_str();
  app.add_option("--t", o.t_values, "group-curve parameter values (lie-rep)");
  app.add_option("--output", o.output, "csv | json | text");
  app.add_option("--out", o.out_path, "output file (default stdout)");
  app.add_option("--tol-structure", o.tol_structure)->capture_default_str();
  app.add_option("--tol-class", o.tol_class)->capture_default_str();
  app.add_option("--tol-cert", o.tol_cert)->capture_default_str();
  app.add_option("--tol-cartan-scalar", o.tol_cartan_scalar)->capture_default_str();
  app.add_option("--tol-cartan-vector", o.tol_cartan_vector)->capture_default_str();
  app.add_option("--tol-geodesic", o.tol_geodesic)->capture_default_str();

  auto* sc_verify = app.add_subcommand("verify-structure",
                                       "check the structure axioms and class");
  auto* sc_frame = app.add_subcommand("frame", "distinguished Frenet frame");
  auto* sc_curv = app.add_subcommand("curvatures", "h, k1, k2 along the curve");
  auto* sc_solve = app.add_subcommand("solve-b", "integrate the Cartan b-ODE");
  auto* sc_lierep = app.add_subcommand("lie-rep", "matrix representations");
  auto* sc_report = app.add_subcommand("report", "full verification report");

  try {
    app.parse(argc, argv);
    o.c2_given = app.count("--c2") > 0;
    validate(o);
    if (sc_verify->parsed()) return cmd_verify_structure(o);
    if (sc_frame->parsed()) return emit_frame_like(o, false);
    if (sc_curv->parsed()) return emit_frame_like(o, true);
    if (sc_solve->parsed()) return cmd_solve_b(o);
    if (sc_lierep->parsed()) return cmd_lie_rep(o);
    if (sc_report->parsed()) return cmd_report(o);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nf::GeodesicCurve& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nf::ZeroSlant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const nf::NonFinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const nf::OrientationDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const nf::DegenerateB& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what()
              << " (lie-rep needs simple dyadic rational inputs)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
