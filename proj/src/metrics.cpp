#include "flock/metrics.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "flock/engine.hpp"

namespace flock {

namespace {

std::int64_t pair_id(const PairKey& key, int n) {
  return static_cast<std::int64_t>(key.i) * n + key.j;
}

}  // namespace

MetricsFrame frame(const FlockState& state) {
  const int n = state.n();
  MetricsFrame f;
  f.time = state.time;
  f.n_components = static_cast<int>(state.graph.components.size());

  double all_sum = 0.0;
  int all_count = 0;
  double conn_sum = 0.0;
  double conn_min = std::numeric_limits<double>::infinity();
  double conn_max = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (state.agents[i].position - state.agents[j].position).norm();
      all_sum += dist;
      ++all_count;
      if (!state.graph.edge(i, j)) continue;
      ++f.n_edges;
      conn_sum += dist;
      conn_min = std::min(conn_min, dist);
      conn_max = std::max(conn_max, dist);

      // Violation: either endpoint's desired separation falls outside the
      // other endpoint's acceptable interval.
      const double d_ji = pair_d_own(state, j, i);
      const double d_ij = pair_d_own(state, i, j);
      const AgentParams& pi = state.params[i];
      const AgentParams& pj = state.params[j];
      if (d_ji < pi.d_min || d_ji > pi.d_max || d_ij < pj.d_min || d_ij > pj.d_max)
        ++f.n_violation_edges;
    }
  }
  if (all_count > 0) f.mean_all_dist = all_sum / all_count;
  if (f.n_edges > 0) {
    f.mean_conn_dist = conn_sum / f.n_edges;
    f.min_conn_dist = conn_min;
    f.max_conn_dist = conn_max;
  }

  f.sep_error_row.reserve(state.pairs.size());
  for (const auto& [key, pair] : state.pairs) {
    if (!pair.active) continue;
    f.sep_error_row.emplace_back(pair_id(key, n), pair.d_est - pair.d_own);
  }
  return f;
}

HeatmapMatrix heatmap(const RunRecord& record) {
  HeatmapMatrix m;
  m.times.reserve(record.frames.size());
  for (const MetricsFrame& f : record.frames) m.times.push_back(f.time);

  // Row order: first activation time, then pair id. Frames are scanned in
  // time order and each sep_error_row is ascending in pair id, so first
  // encounter order is exactly the required order.
  std::map<std::int64_t, int> row_of;
  for (const MetricsFrame& f : record.frames) {
    for (const auto& [id, unused] : f.sep_error_row) {
      if (!row_of.contains(id)) {
        row_of.emplace(id, static_cast<int>(m.pair_ids.size()));
        m.pair_ids.push_back(id);
      }
    }
  }

  m.values.assign(static_cast<std::size_t>(m.rows()) * m.cols(),
                  std::numeric_limits<double>::quiet_NaN());
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [id, e_s] : record.frames[c].sep_error_row)
      m.values[static_cast<std::size_t>(row_of.at(id)) * m.cols() + c] = e_s;
  }
  return m;
}

}  // namespace flock
