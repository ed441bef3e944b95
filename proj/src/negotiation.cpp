#include "flock/negotiation.hpp"

#include <algorithm>

#include "flock/potentials.hpp"

namespace flock {

double filter_step(double d_est, double observed_s, double tau, double dt) {
  return d_est + (dt / tau) * (observed_s - d_est);
}

double negotiate_step(double d_own, double d_est, const AgentParams& params, double dt) {
  const double gate = bump(d_est, params.d_min, params.d_max, params.p);
  const double next = d_own + dt * params.k_d * gate * (d_est - d_own);
  return std::clamp(next, params.d_min, params.d_max);
}

void update_pair_lifecycle(PairTable& pairs, std::span<const Vec2> positions,
                           std::span<const AgentParams> params,
                           std::span<const double> initial_sep) {
  const int n = static_cast<int>(positions.size());

  // In-range is directed: j must be inside agent i's own sensing range.
  // Pairs that left range freeze in place and resume on re-contact.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool in_range = (positions[i] - positions[j]).norm() < params[i].sensing_range;
      const auto it = pairs.find(PairKey{i, j});
      if (it != pairs.end())
        it->second.active = in_range;
      else if (in_range)
        pairs.emplace(PairKey{i, j}, PairState{initial_sep[i], initial_sep[i], true});
    }
  }
}

}  // namespace flock
