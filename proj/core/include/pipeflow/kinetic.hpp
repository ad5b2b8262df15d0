#ifndef PIPEFLOW_KINETIC_HPP_
#define PIPEFLOW_KINETIC_HPP_

namespace pipeflow {
namespace kinetic {

/// Compact-support Gibbs equilibrium: chi(w) = 1/(2 sqrt 3) on [-sqrt3, sqrt3],
/// zero outside. Even, unit mass, unit second moment.
double chi(double w);

/// Macroscopic state of one cell seen by the microscopic machinery. The
/// equilibrium density is M(xi) = (area/sonic) * chi((xi - velocity)/sonic),
/// supported on [velocity - sqrt3*sonic, velocity + sqrt3*sonic].
struct CellKineticState {
  double area;      // equivalent wet area A, m^2
  double velocity;  // U = Q/A, m/s
  double sonic;     // c, m/s
};

/// Builds the cell state from conservative variables; rejects area <= 0.
CellKineticState maxwellian_from_macro(double area, double discharge, double sonic);

struct Moments {
  double m0;  // integral of M
  double m1;  // integral of xi M
  double m2;  // integral of xi^2 M
};

/// Closed-form partial moments of the equilibrium over [lo, hi] (infinities
/// allowed); the interval is clipped against the compact support.
Moments partial_moments(const CellKineticState& state, double lo, double hi);

/// Same moments for the Gaussian equilibrium chi(w) = exp(-w^2/2)/sqrt(2 pi).
/// Kept as a documented alternative only: its unbounded support defeats any
/// CFL bound, so it is never used by the solver.
Moments gaussian_partial_moments(const CellKineticState& state, double lo, double hi);

/// Macroscopic interface fluxes assembled from the transmission/reflection
/// decomposition at a potential barrier dz (pseudo-altitude jump,
/// right minus left). The mass flux is a single shared expression, so
/// mass == the first component of both side fluxes exactly.
struct FluxPair {
  double mass;            // (F_A)^- = (F_A)^+, m^3/s
  double momentum_left;   // (F_Q)^-, m^4/s^2
  double momentum_right;  // (F_Q)^+, m^4/s^2
};

FluxPair interface_flux(const CellKineticState& left, const CellKineticState& right,
                        double dz, double gravity);

}  // namespace kinetic
}  // namespace pipeflow

#endif  // PIPEFLOW_KINETIC_HPP_
