#ifndef PIPEFLOW_CONSTANTS_HPP_
#define PIPEFLOW_CONSTANTS_HPP_

#include <optional>

namespace pipeflow {

/// Physical constants of a pressurised-pipe scenario. The sonic speed is
/// always resolved; beta/rho0 are kept when the user supplied them so the
/// consistency invariant c = 1/sqrt(beta*rho0) can be re-checked.
struct PhysicalConstants {
  double gravity = 9.81;        // m/s^2
  double sonic_speed = 1400.0;  // m/s
  std::optional<double> beta;   // water compressibility, m^2/N
  std::optional<double> rho0;   // reference density, kg/m^3
  std::optional<double> strickler;  // Manning-Strickler K_s, m^(1/3)/s; absent = frictionless
};

/// Sonic speed of the linearised pressure law, c = 1/sqrt(beta*rho0).
double sonic_speed_from_compressibility(double beta, double rho0);

/// Effective sonic speed in a thin-walled elastic pipe,
/// c = 1/sqrt(rho0*(beta + D/(E*e))) with diameter D, Young's modulus E and
/// wall thickness e. Reduces to the rigid value as E*e -> infinity.
double effective_sonic_speed(double beta, double rho0, double young_modulus,
                             double wall_thickness, double diameter);

/// Validates positivity and, when beta and rho0 are present, the consistency
/// of sonic_speed with them to 1e-12 relative. Throws std::invalid_argument.
void validate(const PhysicalConstants& constants);

}  // namespace pipeflow

#endif  // PIPEFLOW_CONSTANTS_HPP_
