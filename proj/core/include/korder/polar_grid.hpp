#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "korder/order.hpp"

namespace korder {

/// Polar grid r_k e^{i t_j}: radii r_max (k+1)/n_radii, angles 2 pi j/n_angles.
/// The center is never a grid point.
struct PolarGrid {
    int n_radii = 36;
    int n_angles = 72;
    double r_max = 0.999;

    double radius(int k) const { return r_max * (k + 1) / n_radii; }
    double angle(int j) const { return 2.0 * kPi * j / n_angles; }
    Complex point(int k, int j) const { return std::polar(radius(k), angle(j)); }
    int size() const { return n_radii * n_angles; }
};

/// Validates r_max < 1 and positive counts; throws DomainError.
void require_valid_grid(const PolarGrid& grid);

/// Minimum of fn(z) over the grid.
template <class Fn>
double grid_minimum(const PolarGrid& grid, Fn&& fn) {
    require_valid_grid(grid);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid.n_radii; ++k) {
        for (int j = 0; j < grid.n_angles; ++j) {
            best = std::min(best, static_cast<double>(fn(grid.point(k, j))));
        }
    }
    return best;
}

}  // namespace korder
