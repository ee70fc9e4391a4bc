#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sepsol/bundle.hpp"
#include "sepsol/equations.hpp"
#include "sepsol/errors.hpp"
#include "sepsol/grid.hpp"
#include "sepsol/solution.hpp"

namespace sepsol {

using PointwiseFn = std::function<double(double, double)>;

namespace detail {

// Central-difference steps balancing truncation against rounding: eps^{1/3}
// for first derivatives, eps^{1/4} for second, scaled by the coordinate.
inline double fd_step_first(double coord) {
    static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
    double h = base * std::fmax(1.0, std::fabs(coord));
    // snap so that (coord + h) - coord is exact
    volatile double probe = coord + h;
    return probe - coord;
}

inline double fd_step_second(double coord) {
    static const double base =
        std::sqrt(std::sqrt(std::numeric_limits<double>::epsilon()));
    double h = base * std::fmax(1.0, std::fabs(coord));
    volatile double probe = coord + h;
    return probe - coord;
}

} // namespace detail

/// Independent finite-difference oracle for the derivative bundle of a
/// pointwise u. First derivatives by central differences with step
/// eps^{1/3} max(1,|coord|), second by eps^{1/4} max(1,|coord|), the cross
/// derivative by the 4-point corner stencil. Throws StencilOutOfDomain when
/// the stencil leaves `domain`.
inline DerivativeBundle fd_bundle(const PointwiseFn& u, double x, double y,
                                  const Rect& domain = Rect::plane()) {
    const double h1x = detail::fd_step_first(x);
    const double h1y = detail::fd_step_first(y);
    const double h2x = detail::fd_step_second(x);
    const double h2y = detail::fd_step_second(y);

    const double hx = std::fmax(h1x, h2x);
    const double hy = std::fmax(h1y, h2y);
    if (!domain.contains(x - hx, y - hy) || !domain.contains(x + hx, y + hy)) {
        throw StencilOutOfDomain("fd_bundle: stencil around (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") leaves the domain");
    }

    DerivativeBundle b;
    b.x = x;
    b.y = y;
    b.source = DerivativeSource::finite_difference;
    b.u = u(x, y);
    b.ux = (u(x + h1x, y) - u(x - h1x, y)) / (2.0 * h1x);
    b.uy = (u(x, y + h1y) - u(x, y - h1y)) / (2.0 * h1y);
    b.uxx = (u(x + h2x, y) - 2.0 * b.u + u(x - h2x, y)) / (h2x * h2x);
    b.uyy = (u(x, y + h2y) - 2.0 * b.u + u(x, y - h2y)) / (h2y * h2y);
    b.uxy = (u(x + h2x, y + h2y) - u(x + h2x, y - h2y) - u(x - h2x, y + h2y) +
             u(x - h2x, y - h2y)) /
            (4.0 * h2x * h2y);
    return b;
}

/// Max |analytic - finite difference| per derivative over the sampled nodes.
struct FdCrossCheck {
    double ux = 0.0, uy = 0.0, uxx = 0.0, uxy = 0.0, uyy = 0.0;
};

struct VerificationReport {
    std::string equation;
    std::string solution;
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
    int nx = 0, ny = 0;
    DerivativeSource source = DerivativeSource::analytic;
    double max_abs_residual = 0.0;
    double argmax_x = 0.0, argmax_y = 0.0;
    double min_ellipticity_margin = std::numeric_limits<double>::infinity();
    long flagged_samples = 0;
    FdCrossCheck fd_crosscheck;
};

inline nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{
        {"equation", r.equation},
        {"solution", r.solution},
        {"grid",
         {{"x_min", r.x_min},
          {"x_max", r.x_max},
          {"y_min", r.y_min},
          {"y_max", r.y_max},
          {"nx", r.nx},
          {"ny", r.ny}}},
        {"source", r.source == DerivativeSource::analytic ? "analytic" : "finite_difference"},
        {"max_abs_residual", r.max_abs_residual},
        {"argmax", {r.argmax_x, r.argmax_y}},
        {"min_ellipticity_margin", r.min_ellipticity_margin},
        {"flagged_samples", r.flagged_samples},
        {"fd_crosscheck",
         {{"ux", r.fd_crosscheck.ux},
          {"uy", r.fd_crosscheck.uy},
          {"uxx", r.fd_crosscheck.uxx},
          {"uxy", r.fd_crosscheck.uxy},
          {"uyy", r.fd_crosscheck.uyy}}},
    };
}

/// Sweeps the grid, evaluating the equation residual and ellipticity margin
/// at every non-excluded in-domain node (analytic bundle, or FD bundle when
/// use_fd). Singular or non-finite evaluations are counted in
/// flagged_samples, never raised. The max-residual node is reported; ties
/// keep the first node in row-major order, so the reduction is deterministic.
/// FD-vs-analytic statistics are gathered on a fixed 5x5 sub-lattice.
inline VerificationReport verify_solution(const EntireSolution& sol,
                                          const QuasilinearEquation& eq, const Grid& grid,
                                          bool use_fd = false) {
    VerificationReport report;
    report.equation = eq.name;
    report.solution = sol.describe();
    report.x_min = grid.x_min;
    report.x_max = grid.x_max;
    report.y_min = grid.y_min;
    report.y_max = grid.y_max;
    report.nx = grid.nx;
    report.ny = grid.ny;
    report.source = use_fd ? DerivativeSource::finite_difference : DerivativeSource::analytic;

    const PointwiseFn value = [&sol](double x, double y) { return sol.value(x, y); };

    bool any_usable = false;
    bool have_max = false;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.node_y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.node_x(i);
            if (grid.excluded(x, y) || !sol.domain().contains(x, y)) continue;
            any_usable = true;
            DerivativeBundle b;
            try {
                b = use_fd ? fd_bundle(value, x, y, sol.domain()) : sol.eval(x, y);
            } catch (const SingularPoint&) {
                ++report.flagged_samples;
                continue;
            } catch (const StencilOutOfDomain&) {
                ++report.flagged_samples;
                continue;
            } catch (const OutOfRange&) {
                ++report.flagged_samples;
                continue;
            }
            const double r = residual(eq, b);
            const double m = ellipticity_margin(eq, b);
            if (!std::isfinite(r) || !std::isfinite(m)) {
                ++report.flagged_samples;
                continue;
            }
            if (!have_max || std::fabs(r) > report.max_abs_residual) {
                have_max = true;
                report.max_abs_residual = std::fabs(r);
                report.argmax_x = x;
                report.argmax_y = y;
            }
            report.min_ellipticity_margin = std::fmin(report.min_ellipticity_margin, m);
        }
    }
    if (!any_usable) {
        throw EmptyGrid("verify_solution: every node is excluded or outside the domain");
    }

    // cross-check on the 5x5 index sub-lattice
    for (int l = 0; l < 5; ++l) {
        const int j = static_cast<int>(std::lround(l * (grid.ny - 1) / 4.0));
        const double y = grid.node_y(j);
        for (int k = 0; k < 5; ++k) {
            const int i = static_cast<int>(std::lround(k * (grid.nx - 1) / 4.0));
            const double x = grid.node_x(i);
            if (grid.excluded(x, y) || !sol.domain().contains(x, y)) continue;
            try {
                const DerivativeBundle a = sol.eval(x, y);
                const DerivativeBundle f = fd_bundle(value, x, y, sol.domain());
                auto& cc = report.fd_crosscheck;
                cc.ux = std::fmax(cc.ux, std::fabs(a.ux - f.ux));
                cc.uy = std::fmax(cc.uy, std::fabs(a.uy - f.uy));
                cc.uxx = std::fmax(cc.uxx, std::fabs(a.uxx - f.uxx));
                cc.uxy = std::fmax(cc.uxy, std::fabs(a.uxy - f.uxy));
                cc.uyy = std::fmax(cc.uyy, std::fabs(a.uyy - f.uyy));
            } catch (const SingularPoint&) {
            } catch (const StencilOutOfDomain&) {
            } catch (const OutOfRange&) {
            }
        }
    }
    return report;
}

/// Parametrized ray (x0 + t dx, y0 + t dy).
struct Ray {
    double x0 = 0.0, y0 = 0.0;
    double dx = 1.0, dy = 0.0;

    std::pair<double, double> point(double t) const { return {x0 + t * dx, y0 + t * dy}; }
};

/// u along the ray at the given parameters; throws OutOfDomain once a
/// parameter leaves the validity domain (the blow-up demonstration for
/// range-restricted pairs).
inline std::vector<std::pair<double, double>> blowup_probe(const EntireSolution& sol,
                                                           const Ray& ray,
                                                           std::span<const double> params) {
    std::vector<std::pair<double, double>> out;
    out.reserve(params.size());
    for (double t : params) {
        const auto [x, y] = ray.point(t);
        out.emplace_back(t, sol.value(x, y));
    }
    return out;
}

enum class Axis { x, y };

/// Least-squares slope of log |grad component at radius r - at 0| against
/// log r: the Holder exponent of the gradient across the given axis
/// (1/3 for the singular |x|^{4/3} solution, ~1 for C^2 solutions).
inline double holder_exponent(const EntireSolution& sol, Axis axis,
                              std::span<const double> radii) {
    if (radii.size() < 3) {
        throw DegenerateFit("holder_exponent: need at least 3 radii");
    }
    const auto grad0 = sol.gradient(0.0, 0.0);
    const double g0 = axis == Axis::x ? grad0.first : grad0.second;

    std::vector<double> xs, ys;
    xs.reserve(radii.size());
    for (double r : radii) {
        const auto g = axis == Axis::x ? sol.gradient(r, 0.0) : sol.gradient(0.0, r);
        const double diff = std::fabs((axis == Axis::x ? g.first : g.second) - g0);
        if (diff <= 0.0) continue; // log undefined; skip
        xs.push_back(std::log(r));
        ys.push_back(std::log(diff));
    }
    if (xs.size() < 3) {
        throw DegenerateFit("holder_exponent: fewer than 3 usable radii");
    }
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

} // namespace sepsol
