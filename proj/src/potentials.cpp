#include "flock/potentials.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace flock {

Vec2 cohesion_gradient(const Vec2& x_i, const Vec2& x_j, double d_ij, double k_c) {
  const Vec2 delta = x_i - x_j;
  const double s = delta.norm();
  if (s < kSeparationFloor) {
    std::ostringstream msg;
    msg << "coincident agents: separation " << s << " m is below the " << kSeparationFloor
        << " m floor";
    throw SimError(msg.str());
  }
  const double s7 = s * s * s * s * s * s * s;
  const double s13 = s7 * s7 / s;
  const double d3 = d_ij * d_ij * d_ij;
  const double coeff = -6.0 * k_c * d3 * d3 / s13 + 6.0 * k_c / s7;
  return delta * (coeff / s);
}

double rho_beta(double alpha, double beta) {
  if (alpha <= beta) return 1.0;
  if (alpha > 1.0) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (alpha - beta) / (1.0 - beta)));
}

double epsilon_norm(const Vec2& x_i, const Vec2& x_j, double r, double epsilon) {
  return epsilon * (x_j - x_i).norm() / (std::sqrt(1.0 + r * r) - 1.0);
}

Vec2 alignment_gradient(const AgentState& self, std::span<const AgentState> neighbours,
                        double r, double epsilon, double beta, double k_a) {
  Vec2 sum;
  for (const AgentState& other : neighbours) {
    const double alpha = epsilon_norm(self.position, other.position, r, epsilon);
    const double weight = rho_beta(alpha, beta);
    sum += (self.velocity - other.velocity) * weight;
  }
  return sum * k_a;
}

Vec2 navigation_gradient(const AgentState& self, const ReferenceState& ref, bool pinned,
                         double k_nx, double k_nv) {
  if (!pinned) return {};
  return (self.position - ref.x_r) * k_nx + (self.velocity - ref.v_r) * k_nv;
}

namespace {

// lambda in (-1, 1) for d_est strictly inside (d_min, d_max).
double bump_lambda(double d_est, double d_min, double d_max) {
  return 2.0 * (d_est - 0.5 * (d_min + d_max)) / (d_max - d_min);
}

// exp(x) underflows to 0 below roughly -745; past that point both the bump
// and its gradient are exact zeros in double precision.
constexpr double kExpUnderflow = 745.0;

}  // namespace

double bump(double d_est, double d_min, double d_max, double p) {
  if (!(d_min < d_est && d_est < d_max)) return 0.0;
  const double lambda = bump_lambda(d_est, d_min, d_max);
  const double q = lambda * lambda / (1.0 - lambda * lambda);
  const double w = std::pow(q, p);
  if (w > kExpUnderflow) return 0.0;
  return std::exp(-w);
}

double bump_gradient(double d_est, double d_min, double d_max, double p) {
  if (!(d_min < d_est && d_est < d_max)) return 0.0;
  const double lambda = bump_lambda(d_est, d_min, d_max);
  const double one_minus = 1.0 - lambda * lambda;
  const double q = lambda * lambda / one_minus;
  if (std::pow(q, p) > kExpUnderflow) return 0.0;
  const double value = std::exp(-std::pow(q, p));
  return value * (-4.0 * lambda * p * std::pow(q, p - 1.0)) /
         (one_minus * one_minus * (d_max - d_min));
}

}  // namespace flock
