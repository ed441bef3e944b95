#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace flock {

/// Configuration rejected at validation time. The message names the
/// offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runtime failure inside a simulation (coincident agents, instability
/// guard, ...).
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 2D vector over doubles. Construction rejects non-finite components, so
/// NaN/Inf can never leak into agent state through arithmetic.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("Vec2 components must be finite");
  }

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) { return *this = *this + o; }
  Vec2& operator-=(const Vec2& o) { return *this = *this - o; }
  bool operator==(const Vec2& o) const = default;

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Position and velocity of one agent.
struct AgentState {
  Vec2 position;
  Vec2 velocity;
};

/// Fixed navigation target shared by all pinned agents.
struct ReferenceState {
  Vec2 x_r;
  Vec2 v_r;
  bool operator==(const ReferenceState&) const = default;
};

/// Per-agent immutable configuration. Realized once per agent at scenario
/// initialization and never mutated during a run.
struct AgentParams {
  double sensing_range = 13.0;  // r_i [m]
  double d_min = 5.0;           // lower separation bound [m]
  double d_max = 13.0;          // upper separation bound [m]
  double k_c = 1e5;             // cohesion gain
  double k_a = 1.0;             // alignment gain
  double k_nx = 2.0;            // navigation position gain
  double k_nv = 4.5;            // navigation velocity gain
  double k_d = 0.2;             // separation negotiation gain
  double tau = 0.5;             // observer filter time constant [s]
  double p = 4.0;               // bump flatness exponent
  double epsilon = 0.926031139261946;  // epsilon-norm scale
  double beta = 0.8;            // alignment kernel threshold
};

/// Epsilon chosen so that the epsilon-norm equals 1 exactly at the sensing
/// range: ||x||_eps = eps*s/(sqrt(1+r^2)-1) = s/r.
inline double default_epsilon(double sensing_range) {
  return (std::sqrt(1.0 + sensing_range * sensing_range) - 1.0) / sensing_range;
}

/// Throws ConfigError naming the offending field if any AgentParams
/// invariant is violated.
void validate_params(const AgentParams& params);

/// State of one directed pair (i -> j): agent i's own desired separation
/// from j and i's estimate of j's desired separation, built from observed
/// distance only.
struct PairState {
  double d_own = 0.0;  // d_ij(t) [m]
  double d_est = 0.0;  // d-hat_ji(t) [m]
  bool active = false; // j currently within i's sensing range
};

/// Fixed value or uniform range; used for the per-agent draws of d(0),
/// d_min and d_max.
struct Distribution {
  enum class Kind { Fixed, Uniform };
  Kind kind = Kind::Fixed;
  double a = 0.0;  // Fixed: the value. Uniform: lower bound.
  double b = 0.0;  // Uniform: upper bound (unused for Fixed).

  static Distribution fixed(double value) { return {Kind::Fixed, value, value}; }
  static Distribution uniform(double lo, double hi) { return {Kind::Uniform, lo, hi}; }

  double lower() const { return a; }
  double upper() const { return kind == Kind::Fixed ? a : b; }
  bool operator==(const Distribution&) const = default;
};

/// Full description of one simulation run. validate_config() checks every
/// invariant; the engine assumes a validated config.
struct ScenarioConfig {
  int n_agents = 30;
  double dt = 0.02;       // sample time t_s [s]
  double duration = 90.0; // simulated time [s]
  std::uint64_t seed = 0;
  double init_box = 70.0; // side of the spawn square, centered at origin [m]
  // Spawn draws are rejected until every pair is at least this far apart; at
  // the paper's gains the Lennard-Jones core is far stiffer than dt can
  // resolve, so seeds with near-coincident spawns would trip the v_max guard
  // on the first step.
  double spawn_min_sep = 8.0;
  bool negotiation_enabled = false;

  Distribution d0 = Distribution::fixed(10.0);     // initial desired separation
  Distribution d_min = Distribution::fixed(5.0);   // lower bound draw
  Distribution d_max = Distribution::fixed(13.0);  // upper bound draw

  double sensing_range = 13.0;
  double k_c = 1e5;
  double k_a = 1.0;
  double k_nx = 2.0;
  double k_nv = 4.5;
  double k_d = 0.2;
  double tau = 0.5;
  double p = 4.0;
  std::optional<double> epsilon;  // empty -> default_epsilon(sensing_range)
  double beta = 0.8;
  double v_max = 1e3;  // instability guard [m/s]

  ReferenceState reference;

  double resolved_epsilon() const {
    return epsilon ? *epsilon : default_epsilon(sensing_range);
  }
  bool operator==(const ScenarioConfig&) const = default;
};

/// Returns the config unchanged if every invariant holds, otherwise throws
/// ConfigError naming the offending field.
const ScenarioConfig& validate_config(const ScenarioConfig& cfg);

}  // namespace flock
