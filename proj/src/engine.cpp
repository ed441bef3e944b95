#include "flock/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flock/potentials.hpp"
#include "flock/rng.hpp"

namespace flock {

namespace {

std::vector<Vec2> positions_of(const FlockState& state) {
  std::vector<Vec2> out;
  out.reserve(state.agents.size());
  for (const AgentState& a : state.agents) out.push_back(a.position);
  return out;
}

std::vector<double> ranges_of(const FlockState& state) {
  std::vector<double> out;
  out.reserve(state.params.size());
  for (const AgentParams& p : state.params) out.push_back(p.sensing_range);
  return out;
}

}  // namespace

FlockState initialize(const ScenarioConfig& cfg) {
  FlockState state;
  state.agents.reserve(cfg.n_agents);
  state.params.reserve(cfg.n_agents);
  state.initial_sep.reserve(cfg.n_agents);

  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.n_agents; ++i) {
    // Draw order is part of the determinism contract: (x, y) pairs until the
    // spawn separation holds, then d_min, d_max, d0.
    double x = 0.0, y = 0.0;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100000)
        throw ConfigError("spawn sampling failed: init_box too crowded for spawn_min_sep");
      x = (rng.uniform01() - 0.5) * cfg.init_box;
      y = (rng.uniform01() - 0.5) * cfg.init_box;
      bool clear = true;
      for (const AgentState& placed : state.agents)
        if ((placed.position - Vec2{x, y}).norm() < cfg.spawn_min_sep) {
          clear = false;
          break;
        }
      if (clear) break;
    }

    AgentParams p;
    p.sensing_range = cfg.sensing_range;
    p.d_min = cfg.d_min.kind == Distribution::Kind::Fixed ? cfg.d_min.a
                                                          : rng.uniform(cfg.d_min.a, cfg.d_min.b);
    p.d_max = cfg.d_max.kind == Distribution::Kind::Fixed ? cfg.d_max.a
                                                          : rng.uniform(cfg.d_max.a, cfg.d_max.b);
    p.k_c = cfg.k_c;
    p.k_a = cfg.k_a;
    p.k_nx = cfg.k_nx;
    p.k_nv = cfg.k_nv;
    p.k_d = cfg.k_d;
    p.tau = cfg.tau;
    p.p = cfg.p;
    p.epsilon = cfg.resolved_epsilon();
    p.beta = cfg.beta;
    validate_params(p);

    double d0 = cfg.d0.kind == Distribution::Kind::Fixed ? cfg.d0.a
                                                         : rng.uniform(cfg.d0.a, cfg.d0.b);
    d0 = std::clamp(d0, p.d_min, p.d_max);

    state.agents.push_back({Vec2{x, y}, Vec2{}});
    state.params.push_back(p);
    state.initial_sep.push_back(d0);
  }

  refresh_graph(state);
  return state;
}

void refresh_graph(FlockState& state) {
  const auto positions = positions_of(state);
  const auto ranges = ranges_of(state);
  state.graph = build_graph(positions, ranges);
}

double pair_d_own(const FlockState& state, int i, int j) {
  const auto it = state.pairs.find(PairKey{i, j});
  return it != state.pairs.end() ? it->second.d_own : state.initial_sep[i];
}

Vec2 control(int i, const FlockState& snapshot, const ScenarioConfig& cfg) {
  const AgentParams& p = snapshot.params[i];
  const AgentState& self = snapshot.agents[i];
  const int n = snapshot.n();

  Vec2 u;
  std::vector<AgentState> neighbours;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const double dist = (self.position - snapshot.agents[j].position).norm();
    if (dist >= p.sensing_range) continue;
    u -= cohesion_gradient(self.position, snapshot.agents[j].position,
                           pair_d_own(snapshot, i, j), p.k_c);
    neighbours.push_back(snapshot.agents[j]);
  }
  u -= alignment_gradient(self, neighbours, p.sensing_range, p.epsilon, p.beta, p.k_a);
  u -= navigation_gradient(self, cfg.reference, snapshot.graph.pins.pinned(i), p.k_nx,
                           p.k_nv);
  return u;
}

void step(FlockState& state, const ScenarioConfig& cfg) {
  const int n = state.n();

  // (1) proximity graph and pins from current positions
  refresh_graph(state);

  // (2) pair lifecycle
  const auto positions = positions_of(state);
  update_pair_lifecycle(state.pairs, positions, state.params, state.initial_sep);

  // (3) observer filter, then bump-gated negotiation, per active directed pair
  for (auto& [key, pair] : state.pairs) {
    if (!pair.active) continue;
    const double observed = (positions[key.i] - positions[key.j]).norm();
    const AgentParams& p = state.params[key.i];
    pair.d_est = filter_step(pair.d_est, observed, p.tau, cfg.dt);
    if (cfg.negotiation_enabled) pair.d_own = negotiate_step(pair.d_own, pair.d_est, p, cfg.dt);
  }

  // (4) control for every agent from the pre-step snapshot
  std::vector<Vec2> u(n);
  for (int i = 0; i < n; ++i) u[i] = control(i, state, cfg);

  // (5) semi-implicit Euler: position update uses the new velocity
  for (int i = 0; i < n; ++i) {
    state.agents[i].velocity += u[i] * cfg.dt;
    state.agents[i].position += state.agents[i].velocity * cfg.dt;
  }

  // (6)
  state.time += cfg.dt;

  for (int i = 0; i < n; ++i) {
    const double speed = state.agents[i].velocity.norm();
    if (speed > cfg.v_max) {
      std::ostringstream msg;
      msg << "instability guard: agent " << i << " reached speed " << speed
          << " m/s (limit " << cfg.v_max << ") at t=" << state.time;
      throw SimError(msg.str());
    }
  }
}

std::size_t step_count(const ScenarioConfig& cfg) {
  const double raw = cfg.duration / cfg.dt;
  const auto steps = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::max<std::size_t>(steps, 1);
}

RunRecord run(const ScenarioConfig& cfg, const MetricsSink& sink) {
  RunRecord record;
  record.seed = cfg.seed;

  FlockState state = initialize(cfg);
  const std::size_t steps = step_count(cfg);
  record.frames.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    try {
      step(state, cfg);
    } catch (const SimError& e) {
      std::ostringstream msg;
      msg << e.what() << " (step " << k << ")";
      throw SimError(msg.str());
    }
    record.frames.push_back(frame(state));
    if (sink) sink(record.frames.back());
  }
  record.final_state = std::move(state);
  return record;
}

}  // namespace flock
