#pragma once

#include <stdexcept>
#include <string>

namespace sepsol {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested value lies outside the range of F (or an integration interval leaves it).
struct OutOfRange : Error {
    using Error::Error;
};

/// Iteration or bracketing budget exhausted without meeting the residual contract.
struct NoConvergence : Error {
    using Error::Error;
};

/// Adaptive subdivision exhausted its depth budget before reaching the tolerance.
struct ToleranceNotMet : Error {
    using Error::Error;
};

/// Evaluation point lies outside the solution's validity rectangle.
struct OutOfDomain : Error {
    using Error::Error;
};

/// Second derivatives requested at a point where the coefficient f vanishes.
struct SingularPoint : Error {
    using Error::Error;
};

/// A finite-difference stencil point falls outside the solution's domain.
struct StencilOutOfDomain : Error {
    using Error::Error;
};

/// Every grid node is excluded or outside the solution's domain.
struct EmptyGrid : Error {
    using Error::Error;
};

/// Too few data points for a least-squares fit.
struct DegenerateFit : Error {
    using Error::Error;
};

} // namespace sepsol
