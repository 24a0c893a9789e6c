#pragma once
#include <vector>

#include "meridian/grid.hpp"
#include "meridian/minkowski.hpp"
#include "meridian/surface.hpp"

namespace meridian {

// Closed-form vs finite-difference Laplacian of the Gauss map at one point.
struct LaplacianReport {
    double u = 0.0, v = 0.0;
    Bivector closed_form;
    Bivector finite_diff;
    double defect = 0.0; // max-abs coordinate difference
    double h = 0.0;
};

// Laplacian of the Gauss map straight from the definition, reduced to the
// coordinate expression
//
//     Delta G = -G_uu - (1/f^2) G_vv - (f'/f) G_u
//
// and discretized with the central 5-point cross (second differences along u
// and v, first difference along u). The v-step is h/f so both legs of the
// cross advance comparable arc length. Truncation error O(h^2). See
// docs/laplacian_reduction.md for the derivation of the reduction.
//
// Throws DomainError if (u, v) is closer than 2h (in u) or 2h/f (in v) to the
// domain boundary.
Bivector laplacian_fd(const MeridianSurface& s, double u, double v, double h);

struct LaplacianComparison {
    std::vector<LaplacianReport> reports; // row-major over the grid
    double max_defect = 0.0;
};

// Per-point closed-vs-finite-difference reports over a grid. The scan is
// parallel for jobs > 1; the reduction is serial and order-independent.
LaplacianComparison compare_laplacians(const MeridianSurface& s, const GridAxes& grid, double h,
                                       int jobs = 1);

} // namespace meridian
