#pragma once

#include <functional>

namespace sepsol {

/// Uniform rectangular evaluation grid. Nodes are visited row-major with x
/// varying fastest. An optional exclusion predicate masks nodes (returns true
/// for nodes to skip), e.g. an axis margin for solutions singular there.
struct Grid {
    double x_min, x_max;
    double y_min, y_max;
    int nx = 2, ny = 2;
    std::function<bool(double, double)> exclusion; // true = skip node

    double node_x(int i) const {
        return x_min + static_cast<double>(i) * (x_max - x_min) / (nx - 1);
    }
    double node_y(int j) const {
        return y_min + static_cast<double>(j) * (y_max - y_min) / (ny - 1);
    }
    bool excluded(double x, double y) const { return exclusion && exclusion(x, y); }
};

/// Predicate excluding a band of half-width `margin` around both axes.
inline std::function<bool(double, double)> axis_exclusion(double margin) {
    return [margin](double x, double y) {
        return (x > -margin && x < margin) || (y > -margin && y < margin);
    };
}

} // namespace sepsol
