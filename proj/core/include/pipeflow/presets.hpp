#ifndef PIPEFLOW_PRESETS_HPP_
#define PIPEFLOW_PRESETS_HPP_

#include <string>
#include <vector>

#include "pipeflow/scenario.hpp"

namespace pipeflow {

/// Compiled-in scenarios reproducing the validation experiments:
///   hammer_10s      water hammer in a uniform sloped pipe, 10 s closure
///   hammer_5s       same pipe, 5 s closure
///   cone_R1_1.25    contracting cone, instantaneous shut-off, gauge at 96 m
/// Each preset is stored as a commented configuration document (also shipped
/// under configs/) and parsed on demand, so the documents are guaranteed to
/// stay valid.
std::vector<std::string> preset_names();
const std::string& preset_text(const std::string& name);
ScenarioConfig preset(const std::string& name);

}  // namespace pipeflow

#endif  // PIPEFLOW_PRESETS_HPP_
