#ifndef PIPEFLOW_BOUNDARY_HPP_
#define PIPEFLOW_BOUNDARY_HPP_

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace pipeflow {

/// Reservoir holding a constant total head (m).
struct ReservoirHead {
  double total_head;
};

/// Prescribed discharge Q(t) as a finite piecewise-linear table. A repeated
/// abscissa encodes a jump (value taken from the later entry).
struct DischargeLaw {
  std::vector<std::pair<double, double>> points;  // (t, Q), t ascending

  double at(double t) const {
    if (points.empty()) throw std::logic_error("empty discharge law");
    if (t <= points.front().first) return points.front().second;
    if (t >= points.back().first) return points.back().second;
    for (std::size_t i = 1; i < points.size(); ++i) {
      const auto& [t0, q0] = points[i - 1];
      const auto& [t1, q1] = points[i];
      if (t < t1) {
        if (t1 == t0) return q1;
        return q0 + (q1 - q0) * (t - t0) / (t1 - t0);
      }
    }
    return points.back().second;
  }
};

/// Closed end: mirror state with negated discharge.
struct Wall {};

/// Wrap-around coupling of the two ends. Test/API use only; both ends must
/// carry it together.
struct Periodic {};

using BoundaryLaw = std::variant<ReservoirHead, DischargeLaw, Wall, Periodic>;

inline bool is_periodic(const BoundaryLaw& law) {
  return std::holds_alternative<Periodic>(law);
}

}  // namespace pipeflow

#endif  // PIPEFLOW_BOUNDARY_HPP_
