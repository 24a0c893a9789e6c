#pragma once
#include <algorithm>
#include <cstddef>

namespace meridian {

// Weights for 4-point (cubic Lagrange) interpolation on a uniform grid
// t_i = t0 + i*step. The window is clamped at the grid ends, so queries in
// the first/last cell use a one-sided stencil.
struct Interp4 {
    std::size_t i0 = 0;
    double l[4] = {0, 0, 0, 0};

    Interp4(double t0, double step, std::size_t n, double t) {
        const double x = (t - t0) / step;
        const long cell = static_cast<long>(x); // floor for x >= 0
        long first = cell - 1;
        first = std::clamp(first, 0L, static_cast<long>(n) - 4L);
        i0 = static_cast<std::size_t>(first);
        const double s = x - static_cast<double>(first);
        const double s1 = s - 1.0, s2 = s - 2.0, s3 = s - 3.0;
        l[0] = -s1 * s2 * s3 / 6.0;
        l[1] = s * s2 * s3 / 2.0;
        l[2] = -s * s1 * s3 / 2.0;
        l[3] = s * s1 * s2 / 6.0;
    }
};

} // namespace meridian
