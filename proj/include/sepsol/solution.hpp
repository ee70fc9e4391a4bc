#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "sepsol/antiderivative.hpp"
#include "sepsol/bundle.hpp"
#include "sepsol/errors.hpp"
#include "sepsol/flux.hpp"
#include "sepsol/grid.hpp"
#include "sepsol/inversion.hpp"

namespace sepsol {

/// Open rectangle, possibly unbounded; evaluation exactly on the boundary is
/// out of domain.
struct Rect {
    double x_lo, x_hi, y_lo, y_hi;

    static Rect plane() {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf, -inf, inf};
    }
    bool contains(double x, double y) const {
        return x > x_lo && x < x_hi && y > y_lo && y < y_hi;
    }
};

enum class SolutionKind {
    general_quadrature,  // u from adaptive quadrature of the inverses
    cardano_closed_form, // cubic pair, u from the closed-form antiderivative
    quadratic,           // identity pair, u = c (x^2 - y^2) / 2
    cosh,                // arsinh pair, u = (cosh cx - cosh cy) / c
    arctan_restricted,   // arctan pair, u = (ln cos cy - ln cos cx) / c
    aronsson,            // |x|^{4/3}-type singular solution, c = 9
};

inline const char* to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::general_quadrature: return "general_quadrature";
        case SolutionKind::cardano_closed_form: return "cardano_closed_form";
        case SolutionKind::quadratic: return "quadratic";
        case SolutionKind::cosh: return "cosh";
        case SolutionKind::arctan_restricted: return "arctan_restricted";
        case SolutionKind::aronsson: return "aronsson";
    }
    return "?";
}

/// A separated solution u(x, y) = h(x) + g(y) of the coefficient-pair family,
/// normalized so that F1(h') = c x, F2(g') = -c y and u(0, 0) = 0. Exposes
/// exact analytic derivatives:
///
///   ux = F1^{-1}(c x),  uy = F2^{-1}(-c y),
///   uxx = c / f1(ux),   uyy = -c / f2(uy),   uxy = 0.
///
/// Immutable after construction; evaluation is pure and reentrant.
class EntireSolution {
  public:
    EntireSolution(FluxPair pair1, FluxPair pair2, double c, SolutionKind kind)
        : pair1_(std::move(pair1)), pair2_(std::move(pair2)), c_(c), kind_(kind),
          domain_(compute_domain(pair1_, pair2_, c_)),
          possibly_sub_c2_(c != 0.0 &&
                           (pair1_.positivity == Positivity::nonnegative_vanishing ||
                            pair2_.positivity == Positivity::nonnegative_vanishing)) {}

    const FluxPair& pair1() const { return pair1_; }
    const FluxPair& pair2() const { return pair2_; }
    double separation_constant() const { return c_; }
    SolutionKind kind() const { return kind_; }
    const Rect& domain() const { return domain_; }

    /// True when a vanishing f makes second derivatives blow up somewhere
    /// (the |x|^{4/3} regime); such solutions are C^1 but not C^2.
    bool possibly_sub_c2() const { return possibly_sub_c2_; }

    /// u only; cheaper than eval and defined on the aronsson axes.
    double value(double x, double y) const {
        require_inside(x, y);
        return value_unchecked(x, y);
    }

    /// (ux, uy); continuous everywhere, including the aronsson axes.
    std::pair<double, double> gradient(double x, double y) const {
        require_inside(x, y);
        if (kind_ == SolutionKind::aronsson) {
            return {3.0 * std::cbrt(x), -3.0 * std::cbrt(y)};
        }
        return {first_derivative_x(x), first_derivative_y(y)};
    }

    /// Full analytic derivative bundle at (x, y).
    DerivativeBundle eval(double x, double y) const {
        require_inside(x, y);
        DerivativeBundle b;
        b.x = x;
        b.y = y;
        b.uxy = 0.0;
        b.source = DerivativeSource::analytic;

        if (kind_ == SolutionKind::aronsson) {
            const double tx = std::cbrt(x);
            const double ty = std::cbrt(y);
            b.u = 2.25 * (x * tx - y * ty);
            b.ux = 3.0 * tx;
            b.uy = -3.0 * ty;
            if (x == 0.0 || y == 0.0) {
                throw SingularPoint("aronsson: second derivatives undefined on the axes");
            }
            b.uxx = 1.0 / (tx * tx);
            b.uyy = -1.0 / (ty * ty);
            return b;
        }

        b.ux = first_derivative_x(x);
        b.uy = first_derivative_y(y);
        b.u = value_unchecked(x, y);
        if (c_ == 0.0) {
            b.uxx = 0.0;
            b.uyy = 0.0;
            return b;
        }
        const double f1 = pair1_.f(b.ux);
        const double f2 = pair2_.f(b.uy);
        if (!(f1 > 0.0) || !(f2 > 0.0)) {
            throw SingularPoint("second derivatives undefined where f vanishes (at x=" +
                                std::to_string(x) + ", y=" + std::to_string(y) + ")");
        }
        b.uxx = c_ / f1;
        b.uyy = -c_ / f2;
        return b;
    }

    /// Deterministic descriptor for reports, e.g. "cubic/cubic c=1 general_quadrature".
    std::string describe() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", c_);
        return pair1_.name + "/" + pair2_.name + " c=" + buf + " " + to_string(kind_);
    }

  private:
    static Rect compute_domain(const FluxPair& p1, const FluxPair& p2, double c) {
        if (c == 0.0) return Rect::plane();
        // x with c*x in range(F1); y with -c*y in range(F2)
        double xa = p1.range_of_F.lo / c, xb = p1.range_of_F.hi / c;
        double ya = p2.range_of_F.lo / -c, yb = p2.range_of_F.hi / -c;
        return {std::fmin(xa, xb), std::fmax(xa, xb), std::fmin(ya, yb), std::fmax(ya, yb)};
    }

    void require_inside(double x, double y) const {
        if (!domain_.contains(x, y)) {
            throw OutOfDomain(describe() + ": (" + std::to_string(x) + ", " +
                              std::to_string(y) + ") is outside the validity domain");
        }
    }

    double first_derivative_x(double x) const {
        switch (kind_) {
            case SolutionKind::cardano_closed_form: return cardano_inverse(c_ * x);
            case SolutionKind::quadratic: return c_ * x;
            case SolutionKind::cosh: return std::sinh(c_ * x);
            case SolutionKind::arctan_restricted: return std::tan(c_ * x);
            default: return invert_monotone(pair1_, c_ * x);
        }
    }

    double first_derivative_y(double y) const {
        switch (kind_) {
            case SolutionKind::cardano_closed_form: return cardano_inverse(-c_ * y);
            case SolutionKind::quadratic: return -c_ * y;
            case SolutionKind::cosh: return std::sinh(-c_ * y);
            case SolutionKind::arctan_restricted: return std::tan(-c_ * y);
            default: return invert_monotone(pair2_, -c_ * y);
        }
    }

    double value_unchecked(double x, double y) const {
        switch (kind_) {
            case SolutionKind::aronsson: {
                const double tx = std::cbrt(x);
                const double ty = std::cbrt(y);
                return 2.25 * (x * tx - y * ty);
            }
            case SolutionKind::cardano_closed_form: {
                if (c_ == 0.0) return 0.0;
                const double hx = closed_form_h(c_ * x) + 0.5;
                const double hy = closed_form_h(c_ * y) + 0.5;
                return (hx - hy) / c_;
            }
            case SolutionKind::quadratic:
                return 0.5 * c_ * (x * x - y * y);
            case SolutionKind::cosh:
                if (c_ == 0.0) return 0.0;
                return (std::cosh(c_ * x) - std::cosh(c_ * y)) / c_;
            case SolutionKind::arctan_restricted:
                if (c_ == 0.0) return 0.0;
                return (std::log(std::cos(c_ * y)) - std::log(std::cos(c_ * x))) / c_;
            case SolutionKind::general_quadrature:
            default: {
                if (c_ == 0.0) {
                    // F1(h') = 0 and F2(g') = 0: the affine branch
                    const double px = invert_monotone(pair1_, 0.0);
                    const double qy = invert_monotone(pair2_, 0.0);
                    return px * x + qy * y;
                }
                const double hx = integrate_inverse(pair1_, c_ * x);
                const double hy = integrate_inverse(pair2_, -c_ * y);
                return (hx - hy) / c_;
            }
        }
    }

    FluxPair pair1_;
    FluxPair pair2_;
    double c_;
    SolutionKind kind_;
    Rect domain_;
    bool possibly_sub_c2_;
};

/// General construction from two flux pairs and a separation constant.
inline EntireSolution construct(const FluxPair& pair1, const FluxPair& pair2, double c) {
    return EntireSolution(pair1, pair2, c, SolutionKind::general_quadrature);
}

namespace detail {
inline const FluxPair& builtin(const char* name) { return *find_flux(name); }
} // namespace detail

/// Closed-form counterpart of construct(cubic, cubic, c).
inline EntireSolution cardano_solution(double c = 1.0) {
    const auto& cubic = detail::builtin("cubic");
    return EntireSolution(cubic, cubic, c, SolutionKind::cardano_closed_form);
}

/// Closed-form counterpart of construct(identity, identity, c): c (x^2 - y^2) / 2.
inline EntireSolution quadratic_solution(double c = 2.0) {
    const auto& identity = detail::builtin("identity");
    return EntireSolution(identity, identity, c, SolutionKind::quadratic);
}

/// Closed-form counterpart of construct(arsinh, arsinh, c): cosh x - cosh y at c = 1.
inline EntireSolution cosh_solution(double c = 1.0) {
    const auto& arsinh = detail::builtin("arsinh");
    return EntireSolution(arsinh, arsinh, c, SolutionKind::cosh);
}

/// Closed-form counterpart of construct(arctan, arctan, c); valid only on the
/// open square |c x|, |c y| < pi/2.
inline EntireSolution arctan_solution(double c = 1.0) {
    const auto& arctan = detail::builtin("arctan");
    return EntireSolution(arctan, arctan, c, SolutionKind::arctan_restricted);
}

/// The singular solution u = (9/4)(|x|^{4/3} - |y|^{4/3}); equals
/// construct(power, power, 9) wherever both are defined. C^1 on the plane,
/// second derivatives blow up on the coordinate axes.
inline EntireSolution aronsson_solution() {
    const auto& power = detail::builtin("power");
    return EntireSolution(power, power, 9.0, SolutionKind::aronsson);
}

/// True iff max |uxx| and max |uyy| over the non-excluded grid nodes are
/// below 1e-12. A SingularPoint during probing counts as non-affine.
inline bool is_affine(const EntireSolution& sol, const Grid& probe) {
    bool any = false;
    for (int j = 0; j < probe.ny; ++j) {
        const double y = probe.node_y(j);
        for (int i = 0; i < probe.nx; ++i) {
            const double x = probe.node_x(i);
            if (probe.excluded(x, y) || !sol.domain().contains(x, y)) continue;
            any = true;
            try {
                const DerivativeBundle b = sol.eval(x, y);
                if (std::fabs(b.uxx) >= 1e-12 || std::fabs(b.uyy) >= 1e-12) return false;
            } catch (const SingularPoint&) {
                return false;
            }
        }
    }
    if (!any) throw EmptyGrid("is_affine: no usable probe nodes");
    return true;
}

} // namespace sepsol
