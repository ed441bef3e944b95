#include "flock/model.hpp"

#include <cmath>

namespace flock {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ConfigError(message);
}

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw ConfigError(std::string(field) + " must be finite");
}

void check_distribution(const Distribution& d, const char* field) {
  require_finite(d.a, field);
  require_finite(d.b, field);
  if (d.kind == Distribution::Kind::Uniform && !(d.a <= d.b))
    throw ConfigError(std::string(field) + " bounds must be ordered (lo <= hi)");
}

}  // namespace

void validate_params(const AgentParams& p) {
  for (auto [v, name] : {std::pair{p.sensing_range, "sensing_range"},
                         {p.d_min, "d_min"},
                         {p.d_max, "d_max"},
                         {p.k_c, "k_c"},
                         {p.k_a, "k_a"},
                         {p.k_nx, "k_nx"},
                         {p.k_nv, "k_nv"},
                         {p.k_d, "k_d"},
                         {p.tau, "tau"},
                         {p.p, "p"},
                         {p.epsilon, "epsilon"},
                         {p.beta, "beta"}})
    require_finite(v, name);

  require(p.sensing_range > 0.0, "sensing_range must be positive");
  require(p.d_min > 0.0, "d_min must be positive");
  require(p.d_min < p.d_max, "d_min must be less than d_max");
  require(p.d_max <= p.sensing_range, "d_max must not exceed sensing_range");
  require(p.k_c >= 0.0, "k_c must be non-negative");
  require(p.k_a >= 0.0, "k_a must be non-negative");
  require(p.k_nx >= 0.0, "k_nx must be non-negative");
  require(p.k_nv >= 0.0, "k_nv must be non-negative");
  require(p.k_d >= 0.0, "k_d must be non-negative");
  require(p.tau > 0.0, "tau must be positive");
  require(p.p > 1.0, "p must be greater than 1");
  require(p.epsilon > 0.0, "epsilon must be positive");
  require(p.beta >= 0.0 && p.beta <= 1.0, "beta must lie in [0, 1]");
}

const ScenarioConfig& validate_config(const ScenarioConfig& cfg) {
  require(cfg.n_agents >= 1, "n_agents must be at least 1");
  require_finite(cfg.dt, "dt");
  require(cfg.dt > 0.0, "dt must be positive");
  require_finite(cfg.duration, "duration");
  require(cfg.duration >= cfg.dt, "duration must be at least dt");
  require_finite(cfg.init_box, "init_box");
  require(cfg.init_box > 0.0, "init_box must be positive");
  require_finite(cfg.spawn_min_sep, "spawn_min_sep");
  require(cfg.spawn_min_sep >= 0.0, "spawn_min_sep must be non-negative");
  // Rough disk-packing feasibility so spawn rejection can terminate.
  const double packing = cfg.n_agents * 3.14159265358979323846 * cfg.spawn_min_sep *
                         cfg.spawn_min_sep / 4.0;
  require(packing <= 0.45 * cfg.init_box * cfg.init_box,
          "init_box too small for n_agents at spawn_min_sep");
  require_finite(cfg.v_max, "v_max");
  require(cfg.v_max > 0.0, "v_max must be positive");

  check_distribution(cfg.d0, "d0");
  check_distribution(cfg.d_min, "d_min");
  check_distribution(cfg.d_max, "d_max");
  require(cfg.d0.lower() > 0.0, "d0 must be positive");
  require(cfg.d_min.lower() > 0.0, "d_min must be positive");
  // Per-agent invariants must hold for every possible draw.
  require(cfg.d_min.upper() < cfg.d_max.lower(),
          "d_min must be less than d_max for all draws");
  require(cfg.d_max.upper() <= cfg.sensing_range,
          "d_max must not exceed sensing_range for all draws");

  // Remaining scalar parameters share the per-agent checks.
  AgentParams p;
  p.sensing_range = cfg.sensing_range;
  p.d_min = cfg.d_min.lower();
  p.d_max = cfg.d_max.upper();
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

  return cfg;
}

}  // namespace flock
