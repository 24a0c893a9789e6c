#pragma once
#include <stdexcept>
#include <string>

namespace meridian {

// Base class for all typed failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation outside a curve/surface/profile domain, or an invalid domain spec.
struct DomainError : Error {
    using Error::Error;
};

// Initial Frenet frame violates its Gram constraints.
struct FrameError : Error {
    using Error::Error;
};

// A hyperplane-rotation formula was asked for outside its regime
// (argument of the logarithm non-positive).
struct RegimeError : Error {
    using Error::Error;
};

// |lambda| fell below tolerance somewhere on the grid during C extraction.
struct SingularLambda : Error {
    using Error::Error;
};

// ODE state left its admissible region (f -> 0, slope angle unbounded).
struct BlowUp : Error {
    using Error::Error;
};

// ODE state violated a strict branch condition (e.g. hyperbolic |f'| -> 1).
struct ConstraintError : Error {
    using Error::Error;
};

// The linear solve for the highest derivative degenerated (1 + c f' -> 0).
struct SingularDenominator : Error {
    using Error::Error;
};

// The literal-ODE residual disagrees with the first-integral residual,
// indicating a defect in the reduction used by the integrator.
struct ReductionMismatch : Error {
    using Error::Error;
};

// Malformed configuration input; message carries the offending field path.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace meridian
