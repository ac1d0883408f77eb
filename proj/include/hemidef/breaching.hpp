#pragma once

#include "hemidef/geometry.hpp"
#include "hemidef/vec3.hpp"

namespace hemidef {

// Solution of the coupled governing equations for one game state.
struct BreachingSolution {
    double theta_rel = 0.0;  // breaching azimuth in the defender-relative frame
    double theta_abs = 0.0;  // world-frame azimuth, wrap(theta_rel + psi_D)
    double beta_star = 0.0;  // approach angle at B, [0, pi]
    Vec3 point;              // B on the base circle
    int iterations = 0;
    double residual_beta = 0.0;
    double residual_theta = 0.0;
    bool used_bisection = false;  // fixed point did not converge, fell back
    bool multi_root = false;      // fallback scan saw more than one sign change
};

// Target times to B and their difference. value < 0 means the defender
// reaches B first.
struct Payoff {
    double tau_defender = 0.0;
    double tau_intruder = 0.0;
    double value = 0.0;  // tau_defender - tau_intruder
};

// First governing equation: approach angle as a function of the breaching
// angle (defender-relative), the defender elevation, and the speed ratio.
// Throws SingularityError when 1 - cos^2(phi) cos^2(theta) vanishes.
double beta_of_theta(double theta, double phi, double nu);

// Second governing equation: breaching angle from the approach angle.
// Throws GeometryError when r < radius * cos(beta) (intruder inside the
// chord circle). The result is not wrapped.
double theta_of_beta(double beta, double psi, double r, double radius);

// Jointly solve the two governing equations by damped fixed-point iteration
// with a scan-and-bisect fallback. psi_defender is only used to place the
// solution in the world frame.
BreachingSolution solve_breaching(const RelativeState& z, double psi_defender);

// Time for the defender to reach B along the great circle at unit maximum
// speed (the defender's maximum speed is the normalization).
double defender_target_time(const RelativeState& z, double theta_rel);

// Time for the intruder to reach B along the straight segment at speed nu.
double intruder_target_time(const IntruderPose& a, double theta_abs, double radius, double nu);

Payoff payoff(const RelativeState& z, const DefenderPose& d, const IntruderPose& a,
              const BreachingSolution& sol);

}  // namespace hemidef
