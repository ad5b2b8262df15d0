#ifndef PIPEFLOW_MOC_HPP_
#define PIPEFLOW_MOC_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pipeflow/boundary.hpp"
#include "pipeflow/timeseries.hpp"

namespace pipeflow {

/// Method-of-characteristics baseline on a uniform pipe, characteristics
/// aligned with the grid (dx = c dt, Courant number exactly one).
struct MocSetup {
  double length;
  double area;
  double sonic;
  double gravity = 9.81;
  std::optional<double> strickler;       // Manning-Strickler K_s
  BoundaryLaw upstream = Wall{};
  BoundaryLaw downstream = Wall{};
  double initial_discharge = 0.0;
  std::optional<double> initial_head;    // anchor when no reservoir is present
  std::size_t nodes = 0;                 // number of reaches; grid has nodes+1 points
  double duration = 0.0;
  std::vector<double> gauges;
  double output_interval = 0.0;          // 0 = record every characteristic step
};

struct MocResult {
  TimeSeries series;
  std::vector<double> final_head;
  std::vector<double> final_discharge;
};

/// Runs the compatibility relations H +- B Q with Manning-Strickler losses.
/// The initial state is steady: constant discharge, head marched from the
/// reservoir end. Rejects invalid geometry or unusable boundary laws.
MocResult moc_solve(const MocSetup& setup);

/// Joukowsky head rise c dU / g for an instantaneous velocity change.
double joukowsky_rise(double sonic, double velocity_change, double gravity);

}  // namespace pipeflow

#endif  // PIPEFLOW_MOC_HPP_
