#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hemidef/errors.hpp"
#include "hemidef/vec3.hpp"

namespace hemidef {

inline constexpr double kPi = std::numbers::pi;

// Wrap an angle to (-pi, pi].
inline double wrap_pi(double angle) {
    double w = std::remainder(angle, 2.0 * kPi);
    if (w <= -kPi) w = kPi;
    return w;
}

inline double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Defender position on the hemisphere surface.
struct DefenderPose {
    double psi = 0.0;     // azimuth, rad, (-pi, pi]
    double phi = 0.0;     // elevation, rad, [0, pi/2]
    double radius = 1.0;  // hemisphere radius, > 0
};

// Intruder position on the ground plane.
struct IntruderPose {
    double psi = 0.0;  // azimuth, rad, (-pi, pi]
    double r = 0.0;    // distance from the origin, >= 0
};

// Defender-relative game state [psi, phi, r] plus the arena radius and the
// intruder/defender maximum-speed ratio.
struct RelativeState {
    double psi = 0.0;  // psi_A - psi_D, wrapped to (-pi, pi]
    double phi = 0.0;  // defender elevation
    double r = 0.0;    // intruder range
    double radius = 1.0;
    double nu = 1.0;  // 0 < nu <= 1
};

inline Vec3 defender_to_cartesian(const DefenderPose& p) {
    const double c = std::cos(p.phi);
    return {p.radius * c * std::cos(p.psi), p.radius * c * std::sin(p.psi),
            p.radius * std::sin(p.phi)};
}

inline Vec3 intruder_to_cartesian(const IntruderPose& p) {
    return {p.r * std::cos(p.psi), p.r * std::sin(p.psi), 0.0};
}

// Inverse of defender_to_cartesian. The azimuth of the exact apex is
// ill-defined; atan2(0, 0) = 0 is returned there.
inline DefenderPose defender_from_cartesian(const Vec3& v, double radius) {
    if (radius <= 0.0) throw GeometryError("radius must be positive");
    DefenderPose p;
    p.radius = radius;
    p.psi = std::atan2(v.y, v.x);
    p.phi = std::asin(clamp_unit(v.z / radius));
    return p;
}

inline IntruderPose intruder_from_cartesian(const Vec3& v) {
    return {std::atan2(v.y, v.x), std::hypot(v.x, v.y)};
}

inline RelativeState relative_state(const DefenderPose& d, const IntruderPose& a, double nu) {
    return {wrap_pi(a.psi - d.psi), d.phi, a.r, d.radius, nu};
}

// Geodesic distance between two points on the sphere of radius R.
// Inputs must lie on the surface within surface_tol (relative to R).
inline double great_circle_distance(const Vec3& p, const Vec3& q, double radius,
                                    double surface_tol = 1e-6) {
    if (radius <= 0.0) throw GeometryError("radius must be positive");
    const double tol = surface_tol * radius;
    if (std::abs(norm(p) - radius) > tol || std::abs(norm(q) - radius) > tol)
        throw GeometryError("great_circle_distance: point is off the sphere surface");
    return radius * std::acos(clamp_unit(dot(p, q) / (radius * radius)));
}

inline Vec3 rotate_z(const Vec3& v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {v.x * c - v.y * s, v.x * s + v.y * c, v.z};
}

// Breaching point B on the base circle at absolute azimuth theta.
inline Vec3 breaching_point_cartesian(double theta_abs, double radius) {
    if (radius <= 0.0) throw GeometryError("radius must be positive");
    return {radius * std::cos(theta_abs), radius * std::sin(theta_abs), 0.0};
}

}  // namespace hemidef
