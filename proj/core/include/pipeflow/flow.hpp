#ifndef PIPEFLOW_FLOW_HPP_
#define PIPEFLOW_FLOW_HPP_

#include <cstddef>
#include <vector>

#include "pipeflow/boundary.hpp"
#include "pipeflow/constants.hpp"
#include "pipeflow/mesh.hpp"

namespace pipeflow {

/// Conservative variables on the mesh at one time level.
struct FlowState {
  double time = 0.0;
  std::vector<double> area;       // A_i, m^2, positive
  std::vector<double> discharge;  // Q_i, m^3/s
};

/// How the pseudo-altitude source enters the interface fluxes.
///
/// `reconstruction` (production default) feeds the kinetic flux with
/// interface states lifted to the higher of the two cell pseudo-altitudes,
/// A* = A exp(-g (z* - Zt)/c^2), plus the matching c^2 (A - A*) momentum
/// corrections. This composition preserves still water (U = 0,
/// c^2 ln A + g Zt constant) to machine precision.
///
/// `barrier_flux` passes the raw jump dZt to the kinetic flux so the
/// transmission/reflection indicators act directly. It is conservative and
/// positivity-preserving under the same CFL but balances still water only
/// to O(g dZt / c^2) per interface, which drifts on coarse meshes with
/// strong section changes; kept for experiments and tests.
enum class SourceTreatment { reconstruction, barrier_flux };

/// CFL time step: courant * min_i h_i / max_i(|U_i| + sqrt3 c), valid for
/// the compact-support equilibrium. Requires 0 < courant < 1 and a finite
/// state.
double cfl_timestep(const FlowState& state, const Mesh& mesh, double courant,
                    const PhysicalConstants& constants);

/// Ghost states (one virtual cell per end) realising the boundary laws.
/// Ghost cells copy the adjacent cell's pseudo-altitude, so the boundary
/// interface carries no barrier and equilibria stay exact at the ends.
struct GhostStates {
  double area_left, discharge_left;
  double area_right, discharge_right;
  bool periodic = false;
};

GhostStates apply_boundaries(const FlowState& state, const Mesh& mesh,
                             const BoundaryLaw& upstream, const BoundaryLaw& downstream,
                             double t, const PhysicalConstants& constants);

/// One conservative transport step followed by the semi-implicit friction
/// substep. Throws std::runtime_error naming the first cell whose area
/// would become non-positive (CFL violation or boundary bug).
FlowState step(const FlowState& state, const Mesh& mesh, double dt,
               const BoundaryLaw& upstream, const BoundaryLaw& downstream,
               const PhysicalConstants& constants,
               SourceTreatment treatment = SourceTreatment::reconstruction);

/// Manning-Strickler friction, semi-implicit in Q:
/// Q* = Q / (1 + dt g K(S) |U^n|) with K(S) = 1/(K_s^2 R_h^{4/3}).
/// Never increases |Q| nor flips its sign; A is untouched. No-op when the
/// constants carry no Strickler coefficient.
FlowState apply_friction(const FlowState& state, const Mesh& mesh, double dt,
                         const PhysicalConstants& constants);

/// Per-cell heads (m) and global entropy of a state.
struct Diagnostics {
  std::vector<double> total_head;  // U^2/2g + (c^2/g) ln A + Zt
  std::vector<double> piezo_head;  // Z + (c^2/g)(A/S - 1)
  double entropy;                  // sum of (Q^2/2A + c^2 A ln A + g A Zt) h_i
};

Diagnostics diagnostics(const FlowState& state, const Mesh& mesh,
                        const PhysicalConstants& constants);

double total_entropy(const FlowState& state, const Mesh& mesh,
                     const PhysicalConstants& constants);

/// Entropy flux (E + c^2 A) U of one cell-like state, used to correct the
/// global entropy balance for the work done through open boundaries.
double entropy_flux(double area, double discharge, double pseudo_altitude,
                    const PhysicalConstants& constants);

}  // namespace pipeflow

#endif  // PIPEFLOW_FLOW_HPP_
