#ifndef PIPEFLOW_SCENARIO_HPP_
#define PIPEFLOW_SCENARIO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pipeflow/boundary.hpp"
#include "pipeflow/constants.hpp"
#include "pipeflow/profile.hpp"

namespace pipeflow {

enum class Backend { kinetic, moc, equivalent_pipe };

enum class InitialKind {
  steady,   // constant discharge, head marched from the reservoir against friction
  still,    // U = 0 at a given total head
  uniform,  // constant A and Q
};

/// A fully validated scenario: physics, geometry, initial state, boundary
/// laws, run controls and output gauges. One flat key = value document per
/// scenario (see parse_config / write_config).
struct ScenarioConfig {
  std::string title;

  // physics
  double gravity = 9.81;
  std::optional<double> sonic_speed;
  std::optional<double> beta;
  std::optional<double> rho0;
  std::optional<double> young_modulus;
  std::optional<double> wall_thickness;
  std::optional<double> strickler;

  // geometry (circular sections)
  double length = 0.0;
  std::vector<std::pair<double, double>> radius;     // (x, R)
  std::vector<std::pair<double, double>> slope_deg;  // (x, angle in degrees)
  double upstream_altitude = 0.0;
  std::vector<std::pair<double, double>> zbar;

  // initial state
  InitialKind initial = InitialKind::steady;
  std::optional<double> initial_discharge;
  std::optional<double> initial_head;
  std::optional<double> initial_area;

  // boundary laws
  BoundaryLaw upstream = Wall{};
  BoundaryLaw downstream = Wall{};

  // run controls
  std::size_t cells = 0;
  double courant = 0.8;
  double duration = 0.0;
  std::vector<double> gauges;
  double output_interval = 0.0;    // resolved default: duration / 1000
  double snapshot_interval = 0.0;  // 0 = no snapshots
  Backend backend = Backend::kinetic;

  /// Resolved physical constants (direct c, c from beta/rho0, or the elastic
  /// wall correction when young_modulus/wall_thickness are present).
  PhysicalConstants constants() const;
  GeometrySpec geometry() const;
  /// Steady initial discharge after defaulting from the discharge law.
  double resolved_initial_discharge() const;
};

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

/// Parse error with a line-anchored message ("file:line: ...").
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and validates a scenario document. Unknown keys, missing required
/// keys and invariant violations raise ConfigError with the offending line.
ScenarioConfig parse_config(std::string_view text,
                            std::string_view source_name = "<config>");

/// Canonical re-emission; parse(write_config(cfg)) == cfg.
std::string write_config(const ScenarioConfig& config);

}  // namespace pipeflow

#endif  // PIPEFLOW_SCENARIO_HPP_
