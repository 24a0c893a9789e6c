// Times the grid kernels (closed-form Laplacian and the finite-difference
// oracle) on the serial reference path and the OpenMP path, and checks that
// both produce bit-identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "meridian/classify.hpp"
#include "meridian/laplacian_fd.hpp"
#include "meridian/surface.hpp"

using namespace meridian;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

MeridianSurface bench_surface() {
    Poly1 phi;
    phi.coeffs = {0.2, 0.4, -0.1};
    auto prof = make_profile(SurfaceKind::elliptic, phi, 1.2, 0.0, 0.0, 1.0);
    SphericalCurveSpec spec;
    spec.kind = SurfaceKind::elliptic;
    spec.kappa = KappaFunction::constant(1.7);
    spec.initial = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    spec.v_lo = 0.0;
    spec.v_hi = 1.2;
    spec.step = 5e-5;
    return MeridianSurface(prof, integrate_spherical(spec));
}

struct Timing {
    double serial_ms = 0.0, parallel_ms = 0.0, max_diff = 0.0;
};

template <class Kernel>
Timing time_kernel(const GridAxes& grid, int threads, Kernel&& kernel) {
    const std::size_t nv = grid.vs.size();
    std::vector<Bivector> serial(grid.size()), parallel(grid.size());

    auto t0 = std::chrono::steady_clock::now();
    grid_for_each_serial(grid, [&](std::size_t i, std::size_t j, double u, double v) {
        serial[i * nv + j] = kernel(u, v);
    });
    Timing t;
    t.serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    grid_for_each(grid, threads, [&](std::size_t i, std::size_t j, double u, double v) {
        parallel[i * nv + j] = kernel(u, v);
    });
    t.parallel_ms = ms_since(t0);

    for (std::size_t k = 0; k < grid.size(); ++k)
        t.max_diff = std::max(t.max_diff, (serial[k] - parallel[k]).max_abs());
    return t;
}

} // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const MeridianSurface s = bench_surface();
    const GridAxes grid = make_axes(s, 220, 220, 0.02);

    std::printf("grid %zux%zu, %d thread(s)\n", grid.us.size(), grid.vs.size(), threads);
    std::printf("%-18s %12s %12s %9s %12s\n", "kernel", "serial_ms", "omp_ms", "speedup",
                "max_diff");

    const Timing closed = time_kernel(
        grid, threads, [&](double u, double v) { return laplacian_closed(s, u, v); });
    std::printf("%-18s %12.2f %12.2f %8.2fx %12.3e\n", "laplacian_closed", closed.serial_ms,
                closed.parallel_ms, closed.serial_ms / closed.parallel_ms, closed.max_diff);

    const Timing fd = time_kernel(
        grid, threads, [&](double u, double v) { return laplacian_fd(s, u, v, 1e-3); });
    std::printf("%-18s %12.2f %12.2f %8.2fx %12.3e\n", "laplacian_fd", fd.serial_ms,
                fd.parallel_ms, fd.serial_ms / fd.parallel_ms, fd.max_diff);

    return (closed.max_diff == 0.0 && fd.max_diff == 0.0) ? 0 : 1;
}
