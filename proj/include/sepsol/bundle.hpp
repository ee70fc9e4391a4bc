#pragma once

namespace sepsol {

enum class DerivativeSource { analytic, finite_difference };

/// Point values of u and its first and second partial derivatives.
struct DerivativeBundle {
    double x = 0.0, y = 0.0;
    double u = 0.0;
    double ux = 0.0, uy = 0.0;
    double uxx = 0.0, uxy = 0.0, uyy = 0.0;
    DerivativeSource source = DerivativeSource::analytic;
};

} // namespace sepsol
