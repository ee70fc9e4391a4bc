#pragma once

#include <cmath>
#include <string>

#include "sepsol/cardano.hpp"
#include "sepsol/errors.hpp"
#include "sepsol/flux.hpp"

namespace sepsol {

struct InversionConfig {
    double rel_tol = 1e-13;
    int max_iter = 200;
    double bracket_growth = 2.0;
};

/// Solves F(t) = x for a monotone flux pair.
///
/// Uses the pair's analytic inverse when present. Otherwise brackets the root
/// by geometric expansion from [-1, 1] and refines with Newton steps
/// (derivative f), falling back to bisection whenever a step leaves the
/// bracket or f(t) <= 0. Convergence is declared on the residual in F:
/// |F(t) - x| <= rel_tol * max(1, |x|).
inline double invert_monotone(const FluxPair& pair, double x,
                              const InversionConfig& cfg = {}) {
    if (!pair.range_of_F.contains(x)) {
        throw OutOfRange(pair.name + ": " + std::to_string(x) +
                         " is outside the range of F");
    }
    if (pair.analytic_inverse) {
        return (*pair.analytic_inverse)(x);
    }

    const double tol = cfg.rel_tol * std::fmax(1.0, std::fabs(x));

    // Bracket [lo, hi] with F(lo) <= x <= F(hi), expanding the relevant end.
    double lo = -1.0, hi = 1.0;
    double flo = pair.F(lo), fhi = pair.F(hi);
    constexpr int max_expansions = 200;
    int expansions = 0;
    while (fhi < x) {
        if (++expansions > max_expansions) {
            throw NoConvergence(pair.name + ": bracketing failed; F appears bounded below " +
                                std::to_string(x));
        }
        lo = hi;
        flo = fhi;
        hi *= cfg.bracket_growth;
        fhi = pair.F(hi);
    }
    while (flo > x) {
        if (++expansions > max_expansions) {
            throw NoConvergence(pair.name + ": bracketing failed; F appears bounded above " +
                                std::to_string(x));
        }
        hi = lo;
        fhi = flo;
        lo *= cfg.bracket_growth;
        flo = pair.F(lo);
    }

    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const double res = pair.F(t) - x;
        if (std::fabs(res) <= tol) return t;
        if (res > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        const double slope = pair.f(t);
        double next = (slope > 0.0) ? t - res / slope : lo;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi); // safeguard: bisection step
        }
        t = next;
    }
    throw NoConvergence(pair.name + ": no convergence inverting F at " + std::to_string(x));
}

} // namespace sepsol
