#pragma once

#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nullframe/errors.hpp"
#include "nullframe/linalg.hpp"
#include "nullframe/structure.hpp"

namespace nullframe {

// Fourth-order first derivative of a uniformly sampled series at index i:
// five-point central in the interior, five-point one-sided at the boundary
// (three-point when fewer than 5 samples exist).
template <typename V>
V sampled_derivative(const std::vector<V>& p, int i, double h) {
  const int n = static_cast<int>(p.size());
  if (i >= 2 && i + 2 < n)
    return (1.0 / (12.0 * h)) *
           (8.0 * (p[i + 1] - p[i - 1]) - (p[i + 2] - p[i - 2]));
  if (n >= 5) {
    if (i == 0)
      return (1.0 / (12.0 * h)) * (-25.0 * p[0] + 48.0 * p[1] - 36.0 * p[2] +
                                   16.0 * p[3] - 3.0 * p[4]);
    if (i == 1)
      return (1.0 / (12.0 * h)) *
             (-3.0 * p[0] - 10.0 * p[1] + 18.0 * p[2] - 6.0 * p[3] + p[4]);
    if (i == n - 2)
      return (1.0 / (12.0 * h)) * (3.0 * p[n - 1] + 10.0 * p[n - 2] -
                                   18.0 * p[n - 3] + 6.0 * p[n - 4] - p[n - 5]);
    return (1.0 / (12.0 * h)) * (25.0 * p[n - 1] - 48.0 * p[n - 2] +
                                 36.0 * p[n - 3] - 16.0 * p[n - 4] + 3.0 * p[n - 5]);
  }
  if (i >= 1 && i + 1 < n) return (1.0 / (2.0 * h)) * (p[i + 1] - p[i - 1]);
  if (i == 0) return (1.0 / (2.0 * h)) * (-3.0 * p[0] + 4.0 * p[1] - p[2]);
  return (1.0 / (2.0 * h)) * (3.0 * p[n - 1] - 4.0 * p[n - 2] + p[n - 3]);
}

// A parametrized regular curve over a uniform grid of t-samples.
//
// Three representations:
//   coordinate_analytic      position/tangent callbacks (flat model)
//   coordinate_sampled       position samples only; derivatives by finite
//                            differences on the grid
//   left_invariant_constant  one-parameter subgroup direction: the tangent
//                            has constant components X in {E0,E1,E2}
class CurveRep {
 public:
  enum class Kind { coordinate_analytic, coordinate_sampled, left_invariant_constant };

  static CurveRep analytic(std::function<Vec3d(double)> position,
                           std::function<Vec3d(double)> tangent, double t0,
                           double t1, int samples,
                           BasisTag basis = BasisTag::coordinate) {
    CurveRep c(Kind::coordinate_analytic, t0, t1, samples, basis);
    c.position_fn_ = std::move(position);
    c.tangent_fn_ = std::move(tangent);
    return c;
  }

  static CurveRep sampled(std::vector<Vec3d> positions, double t0, double t1,
                          BasisTag basis = BasisTag::coordinate) {
    if (positions.size() < 3)
      throw std::invalid_argument("sampled curve needs at least 3 points");
    CurveRep c(Kind::coordinate_sampled, t0, t1,
               static_cast<int>(positions.size()), basis);
    c.position_samples_ = std::move(positions);
    return c;
  }

  static CurveRep left_invariant(const Vec3d& tangent, double t0, double t1,
                                 int samples) {
    CurveRep c(Kind::left_invariant_constant, t0, t1, samples,
               BasisTag::left_invariant);
    c.constant_tangent_ = tangent;
    return c;
  }

  Kind kind() const { return kind_; }
  BasisTag basis() const { return basis_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  int samples() const { return samples_; }
  double dt() const { return (t1_ - t0_) / (samples_ - 1); }
  double time_at(int i) const { return t0_ + i * dt(); }
  const Vec3d& constant_tangent() const { return constant_tangent_; }

  bool has_callbacks() const { return kind_ != Kind::coordinate_sampled; }

  // Tangent at arbitrary t; callback representations only.
  Vec3d tangent(double t) const {
    switch (kind_) {
      case Kind::coordinate_analytic: return tangent_fn_(t);
      case Kind::left_invariant_constant: return constant_tangent_;
      default:
        throw std::logic_error("sampled curve has no off-grid tangent");
    }
  }

  Vec3d tangent_at(int i) const {
    if (kind_ != Kind::coordinate_sampled) return tangent(time_at(i));
    return fd_tangent(i);
  }

  // d(tangent)/dt at grid node i. Together with the Christoffel term this
  // yields the covariant acceleration.
  Vec3d tangent_derivative_at(int i) const {
    switch (kind_) {
      case Kind::coordinate_analytic:
        return richardson_derivative([this](double t) { return tangent_fn_(t); },
                                     time_at(i), fd_step());
      case Kind::left_invariant_constant: return Vec3d{};
      default: return fd_second_derivative(i);
    }
  }

  Vec3d position_at(int i) const {
    switch (kind_) {
      case Kind::coordinate_analytic: return position_fn_(time_at(i));
      case Kind::coordinate_sampled: return position_samples_[i];
      default:
        throw std::logic_error("left-invariant curve has no coordinate position");
    }
  }

  double fd_step() const { return 1e-3; }

 private:
  CurveRep(Kind k, double t0, double t1, int samples, BasisTag basis)
      : kind_(k), basis_(basis), t0_(t0), t1_(t1), samples_(samples) {
    if (!(t0 < t1)) throw std::invalid_argument("curve needs t0 < t1");
    if (samples_ < 3) throw std::invalid_argument("curve needs samples >= 3");
  }

  Vec3d fd_tangent(int i) const {
    return sampled_derivative(position_samples_, i, dt());
  }

  // Second differences with one Richardson refinement in the interior,
  // four-point one-sided at the boundary.
  Vec3d fd_second_derivative(int i) const {
    const auto& p = position_samples_;
    const int n = samples_;
    const double h = dt();
    auto d2 = [&](int j, int step) {
      return (1.0 / (step * h * step * h)) *
             (p[j + step] - 2.0 * p[j] + p[j - step]);
    };
    if (i >= 2 && i + 2 < n)
      return (1.0 / 3.0) * (4.0 * d2(i, 1) - d2(i, 2));
    if (i >= 1 && i + 1 < n) return d2(i, 1);
    if (n >= 4) {
      if (i == 0)
        return (1.0 / (h * h)) * (2.0 * p[0] - 5.0 * p[1] + 4.0 * p[2] - p[3]);
      return (1.0 / (h * h)) *
             (2.0 * p[n - 1] - 5.0 * p[n - 2] + 4.0 * p[n - 3] - p[n - 4]);
    }
    return d2(1, 1);
  }

  Kind kind_;
  BasisTag basis_;
  double t0_, t1_;
  int samples_;
  std::function<Vec3d(double)> position_fn_, tangent_fn_;
  std::vector<Vec3d> position_samples_;
  Vec3d constant_tangent_;
};

// Reads "t,x1,x2,x3" rows (optional header) into a sampled curve.
// The t column must be uniformly spaced.
inline CurveRep load_curve_csv(std::istream& in,
                               BasisTag basis = BasisTag::coordinate) {
  std::vector<double> ts;
  std::vector<Vec3d> pts;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream row(line);
    std::string field;
    std::array<double, 4> vals{};
    std::size_t k = 0;
    bool numeric = true;
    while (std::getline(row, field, ',') && k < 4) {
      try {
        std::size_t pos = 0;
        vals[k] = std::stod(field, &pos);
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
      ++k;
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw std::invalid_argument("curve csv: non-numeric row: " + line);
    }
    if (k != 4)
      throw std::invalid_argument("curve csv: expected 4 columns: " + line);
    first = false;
    ts.push_back(vals[0]);
    pts.push_back({vals[1], vals[2], vals[3]});
  }
  if (pts.size() < 3)
    throw std::invalid_argument("curve csv: need at least 3 sample rows");
  const double h = (ts.back() - ts.front()) / (double(ts.size()) - 1.0);
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (std::abs(ts[i] - (ts.front() + double(i) * h)) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("curve csv: t column must be uniform");
  return CurveRep::sampled(std::move(pts), ts.front(), ts.back(), basis);
}

}  // namespace nullframe
