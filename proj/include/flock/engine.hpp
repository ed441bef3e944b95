#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flock/graph.hpp"
#include "flock/metrics.hpp"
#include "flock/model.hpp"
#include "flock/negotiation.hpp"

namespace flock {

/// Complete simulation state. params and initial_sep are the per-agent
/// configuration realized from the scenario's distributions at
/// initialization; they stay constant over a run.
struct FlockState {
  double time = 0.0;
  std::vector<AgentState> agents;
  std::vector<AgentParams> params;
  std::vector<double> initial_sep;  // each agent's configured d(0)
  PairTable pairs;
  FlockGraph graph;  // derived; rebuilt at the start of every step

  int n() const { return static_cast<int>(agents.size()); }
};

/// Everything a finished run produced: one MetricsFrame per step plus the
/// final state and the identifiers needed to reproduce it.
struct RunRecord {
  std::vector<MetricsFrame> frames;
  FlockState final_state;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
};

/// Draws initial positions uniformly from the spawn square and realizes the
/// per-agent parameters (d(0) clamped into [d_min, d_max]). Velocities start
/// at zero. Deterministic given cfg.seed. Expects a validated config.
FlockState initialize(const ScenarioConfig& cfg);

/// Rebuilds the proximity graph, components, degrees, and pins from the
/// current positions.
void refresh_graph(FlockState& state);

/// Agent i's negotiated separation toward j: the pair-table value when an
/// entry exists, the agent's configured d(0) otherwise.
double pair_d_own(const FlockState& state, int i, int j);

/// Total control acceleration for agent i from the snapshot: negated sum of
/// cohesion gradients over neighbours within i's own sensing range, minus
/// the alignment and navigation gradients. Reads only agent i's params, its
/// pair-table rows, and neighbour positions/velocities within r_i.
Vec2 control(int i, const FlockState& snapshot, const ScenarioConfig& cfg);

/// One synchronous step: rebuild graph and pins, pair lifecycle, filter and
/// (if enabled) negotiation per active directed pair, control for all agents
/// from the pre-step snapshot, then semi-implicit Euler
/// (v += u dt; x += v dt). Throws SimError if any speed exceeds cfg.v_max.
void step(FlockState& state, const ScenarioConfig& cfg);

/// Number of steps a run executes: ceil(duration / dt).
std::size_t step_count(const ScenarioConfig& cfg);

using MetricsSink = std::function<void(const MetricsFrame&)>;

/// Runs the full scenario, emitting one MetricsFrame per step to the record
/// and to the optional sink. Step errors are rethrown with the failing step
/// index. Fully deterministic per (config, seed).
RunRecord run(const ScenarioConfig& cfg, const MetricsSink& sink = {});

}  // namespace flock
