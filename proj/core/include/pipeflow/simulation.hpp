#ifndef PIPEFLOW_SIMULATION_HPP_
#define PIPEFLOW_SIMULATION_HPP_

#include <cstddef>
#include <vector>

#include "pipeflow/flow.hpp"
#include "pipeflow/mesh.hpp"
#include "pipeflow/scenario.hpp"
#include "pipeflow/timeseries.hpp"

namespace pipeflow {

/// Discretised scenario ready to march: mesh, constants and boundary laws.
struct KineticModel {
  Mesh mesh;
  PhysicalConstants constants;
  BoundaryLaw upstream;
  BoundaryLaw downstream;
};

KineticModel build_model(const ScenarioConfig& config);

/// Initial state per the scenario's `initial` kind. `steady` marches the
/// total head from the reservoir end against the friction slope at constant
/// discharge, then closes A via the head relation.
FlowState initial_state(const ScenarioConfig& config, const KineticModel& model);

struct RunResult {
  TimeSeries series;
  std::vector<Snapshot> snapshots;
  FlowState final_state;                      // kinetic backend only
  std::vector<EntropyViolation> entropy_log;  // kinetic backend only
  std::size_t steps = 0;
};

/// Runs the scenario with its configured backend. The kinetic loop clips the
/// CFL step to land exactly on output times and records gauges at the
/// nearest cell centres. The entropy log collects steps whose flux-corrected
/// entropy balance increased by more than 1e-8 relative.
RunResult run(const ScenarioConfig& config);

/// Rise comparison over a family of upstream radii (cone sweep).
struct RiseRow {
  double r1;
  double rise_kinetic;
  double rise_equivalent;
  double relative_gap;  // (kinetic - equivalent) / equivalent
};

std::vector<RiseRow> compare_cone(const ScenarioConfig& base,
                                  const std::vector<double>& r1_values,
                                  std::size_t threads = 0);

}  // namespace pipeflow

#endif  // PIPEFLOW_SIMULATION_HPP_
