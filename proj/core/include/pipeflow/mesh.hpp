#ifndef PIPEFLOW_MESH_HPP_
#define PIPEFLOW_MESH_HPP_

#include <cstddef>
#include <vector>

#include "pipeflow/profile.hpp"

namespace pipeflow {

/// Uniform cell decomposition of the pipe with per-cell averaged geometry
/// and the interface potential barriers dZt_{i+1/2} = Zt_{i+1} - Zt_i.
struct Mesh {
  std::vector<double> edge_x;                // N+1 cell edges
  std::vector<double> cell_size;             // h_i
  std::vector<double> cell_area;             // S_i
  std::vector<double> cell_pseudo_altitude;  // Zt_i
  std::vector<double> cell_altitude;         // Z_i (for piezometric head)
  std::vector<double> cell_hydraulic_radius; // R_h = S/P_m, circular-equivalent
  std::vector<double> barrier;               // N-1 interior interface jumps

  std::size_t cell_count() const { return cell_size.size(); }
  double length() const { return edge_x.empty() ? 0.0 : edge_x.back() - edge_x.front(); }
  double cell_center(std::size_t i) const { return 0.5 * (edge_x[i] + edge_x[i + 1]); }
  /// Index of the cell whose centre is nearest to x.
  std::size_t nearest_cell(double x) const;
};

/// Cell values are midpoint samples of the interpolated profile; barriers
/// are exact differences of cell pseudo-altitudes. Requires n_cells >= 2
/// and ztilde aligned with profile.samples.
Mesh build_mesh(const PipeProfile& profile, const std::vector<double>& ztilde,
                std::size_t n_cells);

}  // namespace pipeflow

#endif  // PIPEFLOW_MESH_HPP_
