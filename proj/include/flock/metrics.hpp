#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace flock {

struct FlockState;
struct RunRecord;

/// One time step's connectivity, separation, and violation statistics.
/// Connected-pair fields are absent when the graph has no edges;
/// mean_all_dist is absent for fewer than two agents.
struct MetricsFrame {
  double time = 0.0;
  int n_edges = 0;
  int n_components = 0;
  std::optional<double> mean_all_dist;   // mean over all unordered agent pairs
  std::optional<double> mean_conn_dist;  // over connected pairs
  std::optional<double> min_conn_dist;
  std::optional<double> max_conn_dist;
  int n_violation_edges = 0;
  /// Separation error e_s = d-hat_ji - d_ij per active directed pair,
  /// keyed by pair id i * n + j, ascending.
  std::vector<std::pair<std::int64_t, double>> sep_error_row;
};

/// Computes every frame field from a state whose graph has been refreshed.
/// A violation edge is a connected pair where either endpoint's desired
/// separation lies outside the other endpoint's [d_min, d_max].
MetricsFrame frame(const FlockState& state);

/// Separation-error matrix: one row per directed pair ever active, ordered
/// by first activation then pair id; one column per step. Cells where the
/// pair was out of range hold NaN.
struct HeatmapMatrix {
  std::vector<std::int64_t> pair_ids;  // per row
  std::vector<double> times;           // per column
  std::vector<double> values;          // row-major; NaN = out of range

  int rows() const { return static_cast<int>(pair_ids.size()); }
  int cols() const { return static_cast<int>(times.size()); }
  double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols() + c]; }
};

HeatmapMatrix heatmap(const RunRecord& record);

}  // namespace flock
