#ifndef PIPEFLOW_CSV_HPP_
#define PIPEFLOW_CSV_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "pipeflow/simulation.hpp"
#include "pipeflow/timeseries.hpp"

namespace pipeflow {

/// Gauge traces as CSV: header `t,gauge_x,Q,piezo_head`, one row per
/// (sample time, gauge), 15 significant digits, LF line endings. Identical
/// runs produce identical bytes.
void write_timeseries(const TimeSeries& series, const std::filesystem::path& destination);
std::string timeseries_csv(const TimeSeries& series);

/// Full-field snapshots: header `t,x,A,Q,piezo_head`.
void write_snapshots(const std::vector<Snapshot>& snapshots,
                     const std::filesystem::path& destination);

/// Cone sweep table: header `R1,rise_kinetic,rise_equivalent,relative_gap`.
void write_rise_table(const std::vector<RiseRow>& rows,
                      const std::filesystem::path& destination);

}  // namespace pipeflow

#endif  // PIPEFLOW_CSV_HPP_
