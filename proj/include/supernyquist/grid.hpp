#ifndef SUPERNYQUIST_GRID_HPP
#define SUPERNYQUIST_GRID_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "supernyquist/error.hpp"

namespace supernyquist {

inline constexpr int kDefaultBiasGrid = 4096;
inline constexpr int kDefaultSpectrumGrid = 1024;

/// G uniformly spaced angular frequencies covering [0, pi] inclusive of both ends.
inline std::vector<double> omega_grid(int grid_size)
{
    if (grid_size < 2)
        throw Error(ErrorCode::InvalidParameter, "grid size must be >= 2");
    std::vector<double> w(static_cast<std::size_t>(grid_size));
    const double step = std::numbers::pi / (grid_size - 1);
    for (int g = 0; g < grid_size; ++g)
        w[static_cast<std::size_t>(g)] = step * g;
    return w;
}

/// Grid index nearest to normalized frequency nu (omega = nu*pi). May fall outside the grid.
inline long nearest_bin(double nu, int grid_size)
{
    return std::lround(nu * (grid_size - 1));
}

} // namespace supernyquist

#endif
