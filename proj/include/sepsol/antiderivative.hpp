#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "sepsol/cardano.hpp"
#include "sepsol/errors.hpp"
#include "sepsol/flux.hpp"
#include "sepsol/inversion.hpp"

namespace sepsol {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    int max_depth = 40; // bisections of any single segment
};

namespace detail {

// Gauss-Legendre nodes/weights (nonnegative half; symmetric about 0).
inline constexpr std::array<double, 4> kG7Nodes = {
    0.0, 0.40584515137739717, 0.74153118559939444, 0.94910791234275852};
inline constexpr std::array<double, 4> kG7Weights = {
    0.41795918367346939, 0.38183005050511894, 0.27970539148927667, 0.12948496616886969};

inline constexpr std::array<double, 8> kG15Nodes = {
    0.0, 0.20119409399743452, 0.39415134707756337, 0.57097217260853885,
    0.72441773136017005, 0.84820658341042722, 0.93727339240070590, 0.98799251802048543};
inline constexpr std::array<double, 8> kG15Weights = {
    0.20257824192556127, 0.19843148532711158, 0.18616100001556221, 0.16626920581699393,
    0.13957067792615431, 0.10715922046717194, 0.070366047488108125, 0.030753241996117268};

struct QuadResult {
    double integral; // 15-point value
    double error;    // |G15 - G7|
};

template <class F>
QuadResult gauss_15_7(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    double s15 = kG15Weights[0] * f(mid);
    for (int i = 1; i < 8; ++i) {
        const double d = rad * kG15Nodes[i];
        s15 += kG15Weights[i] * (f(mid + d) + f(mid - d));
    }
    double s7 = kG7Weights[0] * f(mid);
    for (int i = 1; i < 4; ++i) {
        const double d = rad * kG7Nodes[i];
        s7 += kG7Weights[i] * (f(mid + d) + f(mid - d));
    }
    return {s15 * rad, std::fabs((s15 - s7) * rad)};
}

struct QuadSegment {
    double a, b;
    double integral, error;
    int depth;
};

inline bool operator<(const QuadSegment& lhs, const QuadSegment& rhs) {
    return lhs.error < rhs.error; // max-heap on the error estimate
}

} // namespace detail

/// Globally adaptive Gauss-Legendre quadrature of f over [a, b]: the segment
/// with the largest 15-vs-7-point discrepancy is bisected until the summed
/// estimates fall below abs_tol. Throws ToleranceNotMet once any segment
/// reaches max_depth bisections while the estimate is still too large.
template <class F>
double adaptive_gauss(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    if (a == b) return 0.0;

    std::priority_queue<detail::QuadSegment> queue;
    auto root = detail::gauss_15_7(f, a, b);
    queue.push({a, b, root.integral, root.error, 0});
    double total_error = root.error;

    while (total_error > cfg.abs_tol) {
        const detail::QuadSegment seg = queue.top();
        if (seg.depth >= cfg.max_depth) {
            throw ToleranceNotMet("adaptive_gauss: depth " + std::to_string(cfg.max_depth) +
                                  " exhausted; estimated error " + std::to_string(total_error));
        }
        queue.pop();
        const double mid = 0.5 * (seg.a + seg.b);
        const auto left = detail::gauss_15_7(f, seg.a, mid);
        const auto right = detail::gauss_15_7(f, mid, seg.b);
        total_error += left.error + right.error - seg.error;
        queue.push({seg.a, mid, left.integral, left.error, seg.depth + 1});
        queue.push({mid, seg.b, right.integral, right.error, seg.depth + 1});
    }

    // Re-sum leaves left-to-right with compensation; the result must not
    // depend on the order segments happened to leave the heap.
    std::vector<detail::QuadSegment> leaves;
    leaves.reserve(queue.size());
    while (!queue.empty()) {
        leaves.push_back(queue.top());
        queue.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.a < rhs.a; });
    double sum = 0.0, comp = 0.0;
    for (const auto& leaf : leaves) {
        const double y = leaf.integral - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

/// H(x) = integral of F^{-1} from 0 to x, by adaptive quadrature; H(0) = 0
/// exactly. The closed interval between 0 and x must lie in range_of_F.
inline double integrate_inverse(const FluxPair& pair, double x,
                                const QuadratureConfig& cfg = {},
                                const InversionConfig& inv = {}) {
    if (x == 0.0) return 0.0;
    if (!pair.range_of_F.contains(0.0) || !pair.range_of_F.contains(x)) {
        throw OutOfRange(pair.name + ": integration interval [0, " + std::to_string(x) +
                         "] leaves the range of F");
    }
    auto finv = [&](double s) { return invert_monotone(pair, s, inv); };
    if (x > 0.0) return adaptive_gauss(finv, 0.0, x, cfg);
    return -adaptive_gauss(finv, x, 0.0, cfg);
}

} // namespace sepsol
