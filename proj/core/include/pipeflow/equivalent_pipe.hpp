#ifndef PIPEFLOW_EQUIVALENT_PIPE_HPP_
#define PIPEFLOW_EQUIVALENT_PIPE_HPP_

#include <cstddef>

#include "pipeflow/moc.hpp"
#include "pipeflow/profile.hpp"
#include "pipeflow/scenario.hpp"

namespace pipeflow {

/// Area of the uniform surrogate pipe preserving total length, travel time
/// and characteristic impedance: with a constant sonic speed,
/// L/S_e = sum ell_k / S_k over a decomposition into short segments, i.e.
/// S_e is the harmonic mean of the area along the pipe.
double equivalent_area(const PipeProfile& profile, std::size_t segments);

struct EquivalentPipeResult {
  double rise;             // head rise at the mapped gauge, m
  double equivalent_area;  // S_e, m^2
  MocResult moc;
};

/// Replaces the (generally non-uniform) scenario geometry by the equivalent
/// uniform pipe, runs the MOC baseline with the scenario's boundary laws and
/// reports the piezometric rise at the first gauge (mapped to the same
/// abscissa; the travel time per metre is unchanged since c is constant).
EquivalentPipeResult equivalent_pipe_rise(const ScenarioConfig& config,
                                          std::size_t segments = 200);

}  // namespace pipeflow

#endif  // PIPEFLOW_EQUIVALENT_PIPE_HPP_
