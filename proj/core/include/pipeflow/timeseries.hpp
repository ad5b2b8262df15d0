#ifndef PIPEFLOW_TIMESERIES_HPP_
#define PIPEFLOW_TIMESERIES_HPP_

#include <cstddef>
#include <vector>

namespace pipeflow {

/// Gauge traces shared by every backend: at each sample time, discharge and
/// piezometric head at each gauge.
struct TimeSeries {
  std::vector<double> gauge_x;  // as placed (cell centre / node), m
  struct Row {
    double t;
    std::vector<double> discharge;
    std::vector<double> piezo_head;
  };
  std::vector<Row> rows;
};

/// Full-field snapshot for --snapshots dumps.
struct Snapshot {
  double t;
  std::vector<double> x, area, discharge, piezo_head;
};

/// Entropy-balance violation record (see simulation.hpp).
struct EntropyViolation {
  std::size_t step;
  double time;
  double excess;  // relative excess above the 1e-8 tolerance band
};

/// Max piezometric-head excursion above the initial value at one gauge.
double head_rise(const TimeSeries& series, std::size_t gauge_index);

}  // namespace pipeflow

#endif  // PIPEFLOW_TIMESERIES_HPP_
