#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepsol/bundle.hpp"
#include "sepsol/flux.hpp"

namespace sepsol {

using CoeffFn = std::function<double(const DerivativeBundle&)>;

/// Quasilinear operator A uxx + 2B uxy + C uyy with coefficients evaluated on
/// the full derivative bundle. ellipticity_bound, when set, gives the
/// sqrt(A*C) context that |B| must stay below for ellipticity.
struct QuasilinearEquation {
    std::string name;
    CoeffFn coeff_A;
    CoeffFn coeff_B; // the B in 2B uxy
    CoeffFn coeff_C;
    CoeffFn ellipticity_bound; // optional (may be empty)
};

/// A uxx + 2B uxy + C uyy at the bundle. Non-finite coefficients propagate
/// into the result rather than throwing; grid sweeps flag such samples.
inline double residual(const QuasilinearEquation& eq, const DerivativeBundle& b) {
    return eq.coeff_A(b) * b.uxx + 2.0 * eq.coeff_B(b) * b.uxy + eq.coeff_C(b) * b.uyy;
}

/// Discriminant A*C - B^2; positive iff |B| < sqrt(A*C) for A, C > 0.
inline double ellipticity_margin(const QuasilinearEquation& eq, const DerivativeBundle& b) {
    const double a = eq.coeff_A(b);
    const double bb = eq.coeff_B(b);
    const double c = eq.coeff_C(b);
    return a * c - bb * bb;
}

enum class Ellipticity { elliptic, degenerate, non_elliptic };

inline Ellipticity classify_ellipticity(double margin, double tol = 1e-14) {
    if (margin > tol) return Ellipticity::elliptic;
    if (margin < -tol) return Ellipticity::non_elliptic;
    return Ellipticity::degenerate;
}

/// A uxx + 2B uxy + C uyy = 0 with A = f1(ux), C = f2(uy) and a pluggable B.
/// Elliptic as long as |B| < sqrt(f1(ux) f2(uy)).
inline QuasilinearEquation theorem_form(const FluxPair& pair1, const FluxPair& pair2,
                                        CoeffFn B) {
    auto f1 = pair1.f;
    auto f2 = pair2.f;
    return {
        "theorem_form(" + pair1.name + "," + pair2.name + ")",
        [f1](const DerivativeBundle& b) { return f1(b.ux); },
        std::move(B),
        [f2](const DerivativeBundle& b) { return f2(b.uy); },
        [f1, f2](const DerivativeBundle& b) { return std::sqrt(f1(b.ux) * f2(b.uy)); },
    };
}

/// Dual form uxx / f2(uy) + 2B uxy + uyy / f1(ux) = 0 solved by the same
/// separated solutions; elliptic for |B| < 1 / sqrt(f1(ux) f2(uy)).
inline QuasilinearEquation corollary_form(const FluxPair& pair1, const FluxPair& pair2,
                                          CoeffFn B) {
    auto f1 = pair1.f;
    auto f2 = pair2.f;
    return {
        "corollary_form(" + pair1.name + "," + pair2.name + ")",
        [f2](const DerivativeBundle& b) { return 1.0 / f2(b.uy); },
        std::move(B),
        [f1](const DerivativeBundle& b) { return 1.0 / f1(b.ux); },
        [f1, f2](const DerivativeBundle& b) { return 1.0 / std::sqrt(f1(b.ux) * f2(b.uy)); },
    };
}

/// sqrt(1+uy^2) uxx + 2B uxy + sqrt(1+ux^2) uyy = 0 with a pluggable B,
/// elliptic for |B| < ((1+uy^2)(1+ux^2))^{1/4}.
inline QuasilinearEquation example3_dual_with_B(CoeffFn B) {
    return {
        "example3_dual_B",
        [](const DerivativeBundle& b) { return std::sqrt(1.0 + b.uy * b.uy); },
        std::move(B),
        [](const DerivativeBundle& b) { return std::sqrt(1.0 + b.ux * b.ux); },
        [](const DerivativeBundle& b) {
            return std::pow((1.0 + b.uy * b.uy) * (1.0 + b.ux * b.ux), 0.25);
        },
    };
}

/// Deterministic pseudo-random smooth coefficient, |B| < bound(bundle)
/// pointwise (strictly, when the bound is positive). The same seed yields the
/// same function; B genuinely depends on all eight bundle fields.
inline CoeffFn random_B_provider(std::uint64_t seed, CoeffFn bound_fn) {
    struct Term {
        double amplitude, frequency, phase;
    };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(0.1, 1.0);
    std::uniform_real_distribution<double> freq(0.3, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::array<Term, 8> terms;
    double norm = 0.0;
    for (auto& t : terms) {
        t = {amp(rng), freq(rng), phase(rng)};
        norm += t.amplitude;
    }
    return [terms, norm, bound = std::move(bound_fn)](const DerivativeBundle& b) {
        const std::array<double, 8> fields = {b.x, b.y, b.u, b.ux, b.uy, b.uxx, b.uxy, b.uyy};
        double s = 0.0;
        for (int i = 0; i < 8; ++i) {
            s += terms[i].amplitude * std::sin(terms[i].frequency * fields[i] + terms[i].phase);
        }
        return 0.95 * bound(b) * (s / norm);
    };
}

/// The fixed-name equations. p = ux and q = uy below.
inline std::vector<QuasilinearEquation> equation_catalog() {
    std::vector<QuasilinearEquation> catalog;
    auto constant = [](double v) {
        return CoeffFn{[v](const DerivativeBundle&) { return v; }};
    };

    // (1 + p^2) uxx + 2pq uxy + (1 + q^2) uyy: the minimal surface equation
    // with its p/q coefficient roles swapped; elliptic everywhere with
    // discriminant 1 + p^2 + q^2.
    catalog.push_back({
        "wrong_msa",
        [](const DerivativeBundle& b) { return 1.0 + b.ux * b.ux; },
        [](const DerivativeBundle& b) { return b.ux * b.uy; },
        [](const DerivativeBundle& b) { return 1.0 + b.uy * b.uy; },
        CoeffFn{},
    });

    // same with the cross term negated; coincides on bundles with uxy = 0
    catalog.push_back({
        "wrong_msa_flipped",
        [](const DerivativeBundle& b) { return 1.0 + b.ux * b.ux; },
        [](const DerivativeBundle& b) { return -(b.ux * b.uy); },
        [](const DerivativeBundle& b) { return 1.0 + b.uy * b.uy; },
        CoeffFn{},
    });

    // uxx + uxy + uyy = 0, stored as B = 1/2 under the 2B convention
    catalog.push_back({"example1", constant(1.0), constant(0.5), constant(1.0), CoeffFn{}});

    // uxx / sqrt(1+p^2) + uyy / sqrt(1+q^2) = 0
    catalog.push_back({
        "example3_sqrt",
        [](const DerivativeBundle& b) { return 1.0 / std::sqrt(1.0 + b.ux * b.ux); },
        constant(0.0),
        [](const DerivativeBundle& b) { return 1.0 / std::sqrt(1.0 + b.uy * b.uy); },
        CoeffFn{},
    });

    // sqrt(1+q^2) uxx + uxy + sqrt(1+p^2) uyy = 0
    catalog.push_back({
        "example3_dual",
        [](const DerivativeBundle& b) { return std::sqrt(1.0 + b.uy * b.uy); },
        constant(0.5),
        [](const DerivativeBundle& b) { return std::sqrt(1.0 + b.ux * b.ux); },
        CoeffFn{},
    });

    // (1 + q^2) uxx - 2pq uxy + (1 + p^2) uyy: the minimal surface equation
    catalog.push_back({
        "minimal_surface",
        [](const DerivativeBundle& b) { return 1.0 + b.uy * b.uy; },
        [](const DerivativeBundle& b) { return -(b.ux * b.uy); },
        [](const DerivativeBundle& b) { return 1.0 + b.ux * b.ux; },
        CoeffFn{},
    });

    // p^2 uxx + 2pq uxy + q^2 uyy: degenerate elliptic, discriminant 0
    catalog.push_back({
        "aronsson",
        [](const DerivativeBundle& b) { return b.ux * b.ux; },
        [](const DerivativeBundle& b) { return b.ux * b.uy; },
        [](const DerivativeBundle& b) { return b.uy * b.uy; },
        CoeffFn{},
    });

    return catalog;
}

inline const QuasilinearEquation* find_equation(const std::vector<QuasilinearEquation>& catalog,
                                                std::string_view name) {
    for (const auto& eq : catalog) {
        if (eq.name == name) return &eq;
    }
    return nullptr;
}

} // namespace sepsol
