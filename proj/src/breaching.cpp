#include "hemidef/breaching.hpp"

#include <cmath>
#include <string>

#include "hemidef/errors.hpp"

namespace hemidef {
namespace {

constexpr double kDamping = 0.5;
constexpr int kMaxFixedPointIterations = 200;
constexpr double kUpdateTol = 1e-12;
constexpr int kScanPoints = 1024;
constexpr int kBisectIterations = 200;
constexpr double kResidualTol = 1e-10;

// Denominator guard for Eq. beta(theta). The denominator vanishes only when
// phi ~ 0 and theta ~ 0 (mod pi) simultaneously.
constexpr double kDenomGuard = 1e-18;

// phi and |psi| both below this means the game is already decided and the
// equations are singular at the natural starting guess.
constexpr double kTerminalGuard = 1e-9;

void validate_state(const RelativeState& z) {
    if (!(z.radius > 0.0)) throw ConfigError("relative state: radius must be positive");
    if (!(z.nu > 0.0 && z.nu <= 1.0)) throw ConfigError("relative state: nu must be in (0, 1]");
    if (!(z.phi >= -1e-12 && z.phi <= kPi / 2 + 1e-12))
        throw ConfigError("relative state: phi must be in [0, pi/2]");
    if (z.r < z.radius * (1.0 - 1e-12))
        throw GeometryError("relative state: intruder is inside the perimeter (r < R)");
}

}  // namespace

double beta_of_theta(double theta, double phi, double nu) {
    const double cp = std::cos(phi);
    const double ct = std::cos(theta);
    const double denom_sq = 1.0 - cp * cp * ct * ct;
    if (denom_sq < kDenomGuard)
        throw SingularityError("beta_of_theta: singular configuration (phi ~ 0 and theta ~ 0)");
    const double arg = nu * cp * std::sin(theta) / std::sqrt(denom_sq);
    return std::acos(clamp_unit(arg));
}

double theta_of_beta(double beta, double psi, double r, double radius) {
    if (!(r > 0.0)) throw GeometryError("theta_of_beta: r must be positive");
    const double arg = radius * std::cos(beta) / r;
    if (std::abs(arg) > 1.0 + 1e-12)
        throw GeometryError("theta_of_beta: intruder inside the chord circle (r < R cos beta)");
    return psi - beta + std::acos(clamp_unit(arg));
}

BreachingSolution solve_breaching(const RelativeState& z, double psi_defender) {
    validate_state(z);
    const double psi = wrap_pi(z.psi);
    if (z.phi < kTerminalGuard && std::abs(psi) < kTerminalGuard)
        throw SingularityError(
            "solve_breaching: singular start configuration (phi ~ 0 and psi ~ 0)");

    const auto iterate = [&](double theta) {
        return theta_of_beta(beta_of_theta(theta, z.phi, z.nu), psi, z.r, z.radius);
    };

    BreachingSolution sol;
    double theta = psi;
    bool converged = false;
    int iterations = 0;
    for (; iterations < kMaxFixedPointIterations; ++iterations) {
        const double update = kDamping * (iterate(theta) - theta);
        theta += update;
        if (std::abs(update) <= kUpdateTol) {
            converged = true;
            ++iterations;
            break;
        }
    }

    if (!converged) {
        // Bracket the root of F(theta) = iterate(theta) - theta on
        // (psi - pi, psi + pi), where F changes sign exactly once for a
        // well-posed state, then bisect.
        const double lo = psi - kPi;
        const double hi = psi + kPi;
        double a = 0.0, b = 0.0, fa = 0.0;
        int sign_changes = 0;
        double prev_x = lo + (hi - lo) / (kScanPoints + 1);
        double prev_f = iterate(prev_x) - prev_x;
        for (int i = 2; i <= kScanPoints; ++i) {
            const double x = lo + (hi - lo) * i / (kScanPoints + 1);
            const double f = iterate(x) - x;
            if ((f > 0.0) != (prev_f > 0.0)) {
                if (sign_changes == 0) {
                    a = prev_x;
                    b = x;
                    fa = prev_f;
                }
                ++sign_changes;
            }
            prev_x = x;
            prev_f = f;
        }
        if (sign_changes == 0)
            throw SolverError("solve_breaching: no sign change found in the fallback scan",
                              0.0, std::abs(iterate(theta) - theta));
        sol.multi_root = sign_changes > 1;
        for (int i = 0; i < kBisectIterations && b - a > 0.0; ++i) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            const double fm = iterate(mid) - mid;
            if ((fm > 0.0) == (fa > 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
            ++iterations;
        }
        theta = 0.5 * (a + b);
        sol.used_bisection = true;
    }

    sol.theta_rel = theta;
    sol.beta_star = beta_of_theta(theta, z.phi, z.nu);
    sol.theta_abs = wrap_pi(theta + psi_defender);
    sol.point = breaching_point_cartesian(sol.theta_abs, z.radius);
    sol.iterations = iterations;
    sol.residual_beta = std::abs(sol.beta_star - beta_of_theta(sol.theta_rel, z.phi, z.nu));
    sol.residual_theta =
        std::abs(theta_of_beta(sol.beta_star, psi, z.r, z.radius) - sol.theta_rel);
    if (sol.residual_beta > kResidualTol || sol.residual_theta > kResidualTol)
        throw SolverError("solve_breaching: residuals above tolerance after " +
                              std::to_string(iterations) + " iterations",
                          sol.residual_beta, sol.residual_theta);
    return sol;
}

double defender_target_time(const RelativeState& z, double theta_rel) {
    // Great-circle arc from D to B at unit maximum speed.
    return z.radius * std::acos(clamp_unit(std::cos(z.phi) * std::cos(theta_rel)));
}

double intruder_target_time(const IntruderPose& a, double theta_abs, double radius, double nu) {
    if (!(nu > 0.0)) throw ConfigError("intruder_target_time: nu must be positive");
    if (a.r < radius * (1.0 - 1e-12))
        throw GeometryError("intruder_target_time: r must be at least R");
    const double d2 =
        a.r * a.r + radius * radius - 2.0 * a.r * radius * std::cos(a.psi - theta_abs);
    return std::sqrt(std::max(d2, 0.0)) / nu;
}

Payoff payoff(const RelativeState& z, const DefenderPose& d, const IntruderPose& a,
              const BreachingSolution& sol) {
    (void)d;
    Payoff p;
    p.tau_defender = defender_target_time(z, sol.theta_rel);
    p.tau_intruder = intruder_target_time(a, sol.theta_abs, z.radius, z.nu);
    p.value = p.tau_defender - p.tau_intruder;
    return p;
}

}  // namespace hemidef
