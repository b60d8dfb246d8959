#pragma once

#include <stdexcept>
#include <string>

namespace nullframe {

// Base for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Slant constant a is zero; frame formulas divide by a.
struct ZeroSlant : Error {
  explicit ZeroSlant(const std::string& what = "slant constant a is zero")
      : Error(what) {}
};

// Curve is geodesic (k1 vanishes somewhere); no distinguished frame exists.
struct GeodesicCurve : Error {
  explicit GeodesicCurve(const std::string& what = "curve is geodesic")
      : Error(what) {}
};

// Tangent vector numerically zero at a sample; curve not regular there.
struct TangentVanishes : Error {
  explicit TangentVanishes(const std::string& what = "tangent vector vanishes")
      : Error(what) {}
};

// Numerical integration left the finite range.
struct NonFinite : Error {
  explicit NonFinite(const std::string& what = "non-finite value encountered")
      : Error(what) {}
};

// c*a <= 0: the slant direction equation is only solved for c*a > 0.
struct OrientationDomain : Error {
  explicit OrientationDomain(const std::string& what = "requires c*a > 0")
      : Error(what) {}
};

// c = +-1/a^2 makes b vanish; excluded from the slant vector family.
struct DegenerateB : Error {
  explicit DegenerateB(const std::string& what = "c = +-1/a^2 gives b = 0")
      : Error(what) {}
};

// Closed-form exponential needs tr A != 0.
struct TraceZero : Error {
  explicit TraceZero(const std::string& what = "matrix has zero trace")
      : Error(what) {}
};

// Closed-form exponential needs A^2 = (tr A) A.
struct NotProjectiveFamily : Error {
  explicit NotProjectiveFamily(
      const std::string& what = "matrix does not satisfy A^2 = (tr A) A")
      : Error(what) {}
};

}  // namespace nullframe
