#pragma once

#include <cmath>

namespace sepsol {

namespace detail {

// Shared core of the cubic closed forms below. For the depressed cubic
// t^3 + 3t - 3x = 0 both cube-root arguments
//
//   big   = sqrt(9x^2 + 4) + 3|x|,   small = sqrt(9x^2 + 4) - 3|x|
//
// appear. Evaluating `small` as written loses all significant digits once
// |x| is large (subtraction of nearly equal numbers); since big * small = 4
// identically, the small argument is computed as 4 / big instead.
struct CubeRootArgs {
    double s;     // sqrt(9x^2 + 4)
    double big;   // s + 3|x|
    double small; // s - 3|x|, evaluated cancellation-free
};

inline CubeRootArgs stable_cube_root_args(double abs_x) {
    CubeRootArgs r;
    r.s = std::sqrt(9.0 * abs_x * abs_x + 4.0);
    r.big = r.s + 3.0 * abs_x;
    r.small = 4.0 / r.big;
    return r;
}

} // namespace detail

/// Unique real root t of t + t^3/3 = x, i.e. the inverse of F(t) = t + t^3/3.
///
/// Evaluated as (cbrt(big) - cbrt(small)) / cbrt(2) with the stabilized
/// arguments above. Odd symmetry is applied for x < 0, so
/// cardano_inverse(-x) == -cardano_inverse(x) exactly.
inline double cardano_inverse(double x) {
    const double ax = std::fabs(x);
    const auto args = detail::stable_cube_root_args(ax);
    static const double inv_cbrt2 = 1.0 / std::cbrt(2.0);
    const double t = inv_cbrt2 * (std::cbrt(args.big) - std::cbrt(args.small));
    return std::signbit(x) ? -t : t;
}

/// Closed-form antiderivative h of cardano_inverse with h(0) = -1/2:
///
///   h(x) = -(1/cbrt(1024)) * { 9x (cbrt(small) - cbrt(big))
///                              + sqrt(9x^2+4) (cbrt(small) + cbrt(big)) }
///
/// Uses the same stabilized cube-root arguments; even in x by construction.
inline double closed_form_h(double x) {
    const double ax = std::fabs(x);
    const auto args = detail::stable_cube_root_args(ax);
    const double ca = std::cbrt(args.small);
    const double cb = std::cbrt(args.big);
    static const double inv_cbrt1024 = 1.0 / std::cbrt(1024.0);
    return -inv_cbrt1024 * (9.0 * ax * (ca - cb) + args.s * (ca + cb));
}

} // namespace sepsol
