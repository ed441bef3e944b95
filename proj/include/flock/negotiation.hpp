#pragma once

#include <compare>
#include <map>
#include <span>

#include "flock/model.hpp"

namespace flock {

/// Directed pair (i -> j). Ordered so that map iteration is deterministic
/// and matches ascending pair id (i * n + j).
struct PairKey {
  int i = 0;
  int j = 0;
  auto operator<=>(const PairKey&) const = default;
};

/// Negotiation state across all directed pairs. An entry exists iff j has
/// ever been within i's sensing range; pairs that leave range stay in the
/// table, frozen, and resume on re-contact.
using PairTable = std::map<PairKey, PairState>;

/// One explicit Euler step of the observer filter
///   d-hat' = (observed_s - d-hat) / tau:
/// returns d_est + (dt / tau) * (observed_s - d_est).
double filter_step(double d_est, double observed_s, double tau, double dt);

/// One explicit Euler step of the bump-gated separation update
///   d' = -k_d V^b(d_est) (d_own - d_est),
/// clamped into [d_min, d_max] as a safety net (the gate alone keeps the
/// value in bounds for dt * k_d <= 1).
double negotiate_step(double d_own, double d_est, const AgentParams& params, double dt);

/// Creates entries for newly in-range directed pairs (d_own = the owner's
/// configured separation, d_est = d_own), reactivates returning pairs, and
/// freezes pairs that left range. In-range means ||x_i - x_j|| < r_i, the
/// owner's sensing range.
void update_pair_lifecycle(PairTable& pairs, std::span<const Vec2> positions,
                           std::span<const AgentParams> params,
                           std::span<const double> initial_sep);

}  // namespace flock
