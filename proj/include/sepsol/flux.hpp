#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepsol/cardano.hpp"

namespace sepsol {

using ScalarFn = std::function<double(double)>;

/// Open interval, possibly unbounded on either side.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lo && x < hi; }
    bool is_entire_line() const { return std::isinf(lo) && std::isinf(hi); }
};

enum class Positivity {
    strictly_positive,     // f > 0 everywhere
    nonnegative_vanishing, // f >= 0 with a zero (degenerate-ellipticity regime)
};

/// A coefficient function f > 0 together with its antiderivative F (F' = f),
/// the range of F, and optional closed forms for F^{-1} and for
/// H(x) = integral of F^{-1} from 0 to x.
struct FluxPair {
    std::string name;
    ScalarFn f;
    ScalarFn F;
    Interval range_of_F;
    Positivity positivity = Positivity::strictly_positive;
    std::optional<ScalarFn> analytic_inverse; // defined on range_of_F
    std::optional<ScalarFn> analytic_H;       // antiderivative of the inverse, H(0) = 0
};

inline double eval_f(const FluxPair& pair, double t) { return pair.f(t); }
inline double eval_F(const FluxPair& pair, double t) { return pair.F(t); }

/// The five built-in pairs: identity, cubic, arsinh, arctan, power.
inline const std::vector<FluxPair>& builtin_catalog() {
    static const double half_pi = std::asin(1.0);
    static const std::vector<FluxPair> catalog = {
        FluxPair{
            "identity",
            [](double) { return 1.0; },
            [](double t) { return t; },
            Interval{},
            Positivity::strictly_positive,
            ScalarFn{[](double x) { return x; }},
            ScalarFn{[](double x) { return 0.5 * x * x; }},
        },
        FluxPair{
            "cubic",
            [](double t) { return 1.0 + t * t; },
            [](double t) { return t + t * t * t / 3.0; },
            Interval{},
            Positivity::strictly_positive,
            ScalarFn{[](double x) { return cardano_inverse(x); }},
            ScalarFn{[](double x) { return closed_form_h(x) + 0.5; }},
        },
        FluxPair{
            "arsinh",
            [](double t) { return 1.0 / std::sqrt(1.0 + t * t); },
            [](double t) { return std::asinh(t); },
            Interval{},
            Positivity::strictly_positive,
            ScalarFn{[](double x) { return std::sinh(x); }},
            ScalarFn{[](double x) { return std::cosh(x) - 1.0; }},
        },
        FluxPair{
            "arctan",
            [](double t) { return 1.0 / (1.0 + t * t); },
            [](double t) { return std::atan(t); },
            Interval{-half_pi, half_pi},
            Positivity::strictly_positive,
            ScalarFn{[](double x) { return std::tan(x); }},
            ScalarFn{[](double x) { return -std::log(std::cos(x)); }},
        },
        FluxPair{
            "power",
            [](double t) { return t * t; },
            [](double t) { return t * t * t / 3.0; },
            Interval{},
            Positivity::nonnegative_vanishing,
            ScalarFn{[](double x) { return std::cbrt(3.0 * x); }},
            // integral of (3s)^{1/3} is (3/4) x cbrt(3x); even in x
            ScalarFn{[](double x) { return 0.75 * x * std::cbrt(3.0 * x); }},
        },
    };
    return catalog;
}

/// Looks up a built-in pair by name; nullptr when absent.
inline const FluxPair* find_flux(std::string_view name) {
    for (const auto& pair : builtin_catalog()) {
        if (pair.name == name) return &pair;
    }
    return nullptr;
}

} // namespace sepsol
