#pragma once

#include <stdexcept>
#include <string>

namespace hemidef {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometrically impossible request: off-surface point, intruder inside the
// perimeter, projection of the origin, and similar.
struct GeometryError : Error {
    using Error::Error;
};

// Configuration at which the governing equations degenerate
// (phi_D ~ 0 and theta ~ 0 simultaneously).
struct SingularityError : Error {
    using Error::Error;
};

// Invalid step request (dl out of range).
struct StepError : Error {
    using Error::Error;
};

// Invalid run configuration; the message names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

// Root finder failed to converge; carries the last residuals.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual_beta, double residual_theta)
        : Error(what), residual_beta_(residual_beta), residual_theta_(residual_theta) {}

    double residual_beta() const noexcept { return residual_beta_; }
    double residual_theta() const noexcept { return residual_theta_; }

private:
    double residual_beta_;
    double residual_theta_;
};

// Simulation aborted mid-run; carries the tick at which it happened.
class EngineError : public Error {
public:
    EngineError(const std::string& what, long tick) : Error(what), tick_(tick) {}

    long tick() const noexcept { return tick_; }

private:
    long tick_;
};

}  // namespace hemidef
