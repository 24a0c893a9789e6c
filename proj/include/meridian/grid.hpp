#pragma once
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace meridian {

class MeridianSurface;

// Rectangular evaluation grid strictly inside the surface domain.
struct GridAxes {
    std::vector<double> us, vs;

    std::size_t size() const { return us.size() * vs.size(); }
};

// nu x nv points with the given absolute margin shaved off each side.
GridAxes make_axes(const MeridianSurface& s, int nu, int nv, double margin);
GridAxes make_axes(double u_lo, double u_hi, double v_lo, double v_hi, int nu, int nv,
                   double margin);

// Serial reference scan. Kernels write results into caller-owned storage
// indexed by (i, j); reductions stay with the caller so parallel and serial
// paths produce bit-identical results.
template <class Fn>
void grid_for_each_serial(const GridAxes& g, Fn&& fn) {
    for (std::size_t i = 0; i < g.us.size(); ++i)
        for (std::size_t j = 0; j < g.vs.size(); ++j) fn(i, j, g.us[i], g.vs[j]);
}

// OpenMP scan over the same index space; jobs <= 1 falls back to the serial
// reference path.
template <class Fn>
void grid_for_each(const GridAxes& g, int jobs, Fn&& fn) {
#ifdef _OPENMP
    if (jobs > 1) {
        const auto nu = static_cast<long>(g.us.size());
        const auto nv = static_cast<long>(g.vs.size());
#pragma omp parallel for collapse(2) schedule(static) num_threads(jobs)
        for (long i = 0; i < nu; ++i)
            for (long j = 0; j < nv; ++j)
                fn(static_cast<std::size_t>(i), static_cast<std::size_t>(j), g.us[i], g.vs[j]);
        return;
    }
#else
    (void)jobs;
#endif
    grid_for_each_serial(g, fn);
}

} // namespace meridian
