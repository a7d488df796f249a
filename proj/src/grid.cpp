#include "flrcov/grid.hpp"

namespace flrcov {

double surface_norm(const Surface& s) {
    return s.values.norm() / s.grid.size();
}

double surface_trace(const Surface& s) {
    return s.values.trace() / s.grid.size();
}

double surface_distance_sq(const Surface& a, const Surface& b) {
    if (a.grid != b.grid)
        throw std::invalid_argument("surface_distance_sq: surfaces on different grids");
    const double d = (a.values - b.values).norm() / a.grid.size();
    return d * d;
}

}  // namespace flrcov
