#ifndef PIPEFLOW_PROFILE_HPP_
#define PIPEFLOW_PROFILE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "pipeflow/constants.hpp"

namespace pipeflow {

/// Breakpoint tables describing a circular pipe: piecewise-linear radius
/// R(x), piecewise-linear slope angle theta(x) (radians), the altitude of
/// the upstream end, and an optional centre-of-mass offset table for
/// non-circular sections (empty means circular, offset identically zero).
struct GeometrySpec {
  std::vector<std::pair<double, double>> radius;  // (x, R) ascending in x
  std::vector<std::pair<double, double>> slope;   // (x, theta); single entry = constant
  double upstream_altitude = 0.0;
  std::vector<std::pair<double, double>> zbar;    // (x, Zbar), optional
};

struct ProfileSample {
  double x;         // curvilinear abscissa, m
  double area;      // section area S, m^2
  double angle;     // slope angle theta, rad
  double altitude;  // Z, m
  double zbar;      // centre-of-mass offset, m
};

/// Sampled geometric description of the pipe. Samples are dense enough
/// (every breakpoint plus a uniform refinement) that linear interpolation
/// between them stays below the scheme's order.
struct PipeProfile {
  double length = 0.0;
  std::vector<ProfileSample> samples;

  double area(double x) const;
  double angle(double x) const;
  double altitude(double x) const;
  double zbar(double x) const;
};

/// Builds the sampled profile: S = pi R^2 at interpolated radii, Z from
/// trapezoid integration of sin(theta). Rejects non-positive radii, angles
/// with |theta| >= pi/2 and non-increasing breakpoint abscissae.
PipeProfile build_profile(const GeometrySpec& spec);

/// Pseudo-altitude Zt = Z + Phi_theta - (c^2/g) ln S per profile sample,
/// with Phi_theta the trapezoid quadrature of Zbar against increments of
/// cos(theta) from x = 0.
std::vector<double> pseudo_altitude(const PipeProfile& profile,
                                    const PhysicalConstants& constants);

}  // namespace pipeflow

#endif  // PIPEFLOW_PROFILE_HPP_
