#pragma once

#include <span>

#include "flock/model.hpp"

namespace flock {

/// Pair separations below this are treated as a configuration error rather
/// than regularized; the Lennard-Jones kernel is singular at zero.
inline constexpr double kSeparationFloor = 1e-6;  // [m]

/// Gradient of the Lennard-Jones cohesion potential with respect to x_i:
///   (-6 k_c d^6 / s^13 + 6 k_c / s^7) * (x_i - x_j)/s,  s = ||x_i - x_j||.
/// Vanishes exactly at s = d_ij. Throws SimError when s < kSeparationFloor.
Vec2 cohesion_gradient(const Vec2& x_i, const Vec2& x_j, double d_ij, double k_c);

/// Smooth proximity weight: 1 on [0, beta], half-cosine rolloff on (beta, 1],
/// 0 beyond 1. The value at alpha = beta is 1 by continuity of the cosine
/// branch.
double rho_beta(double alpha, double beta);

/// Range-normalized distance: epsilon * ||x_j - x_i|| / (sqrt(1 + r^2) - 1).
/// With the default epsilon this equals ||x_j - x_i|| / r.
double epsilon_norm(const Vec2& x_i, const Vec2& x_j, double r, double epsilon);

/// Velocity-consensus gradient: k_a * sum_j rho_beta(||x_i - x_j||_eps) (v_i - v_j).
Vec2 alignment_gradient(const AgentState& self, std::span<const AgentState> neighbours,
                        double r, double epsilon, double beta, double k_a);

/// Reference-tracking gradient, active only for pinned agents:
///   kappa(i) * (k_nx (x_i - x_r) + k_nv (v_i - v_r)).
Vec2 navigation_gradient(const AgentState& self, const ReferenceState& ref, bool pinned,
                         double k_nx, double k_nv);

/// Smooth compactly-supported constraint gate: with
///   lambda = 2 (d_est - (d_min + d_max)/2) / (d_max - d_min),
/// returns exp(-(lambda^2 / (1 - lambda^2))^p) strictly inside
/// (d_min, d_max) and exactly 0 otherwise, including at the boundaries.
double bump(double d_est, double d_min, double d_max, double p);

/// Derivative of bump() with respect to d_est; 0 outside the support.
double bump_gradient(double d_est, double d_min, double d_max, double p);

}  // namespace flock
