#include "meridian/laplacian_fd.hpp"

#include <cmath>
#include <cstdio>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

Bivector gauss_at(const MeridianSurface& s, double u, double v) {
    return gauss_map(s.point(u, v));
}

} // namespace

Bivector laplacian_fd(const MeridianSurface& s, double u, double v, double h) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");

    const ProfileSample ps = s.profile().at(u);
    const double hv = h / ps.f; // comparable arc length along the v-leg

    const bool inside = u - 2.0 * h >= s.u_lo() && u + 2.0 * h <= s.u_hi() &&
                        v - 2.0 * hv >= s.v_lo() && v + 2.0 * hv <= s.v_hi();
    if (!inside) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "stencil at (u, v) = (%.6g, %.6g) with h = %.3g leaves the domain", u, v,
                      h);
        throw DomainError(msg);
    }

    const Bivector g0 = gauss_at(s, u, v);
    const Bivector gu_p = gauss_at(s, u + h, v);
    const Bivector gu_m = gauss_at(s, u - h, v);
    const Bivector gv_p = gauss_at(s, u, v + hv);
    const Bivector gv_m = gauss_at(s, u, v - hv);

    const double inv_h2 = 1.0 / (h * h);
    const double inv_hv2 = 1.0 / (hv * hv);
    const Bivector g_uu = (gu_p - 2.0 * g0 + gu_m) * inv_h2;
    const Bivector g_vv = (gv_p - 2.0 * g0 + gv_m) * inv_hv2;
    const Bivector g_u = (gu_p - gu_m) * (0.5 / h);

    const double f2 = ps.f * ps.f;
    return (-1.0) * g_uu - (1.0 / f2) * g_vv - (ps.df / ps.f) * g_u;
}

LaplacianComparison compare_laplacians(const MeridianSurface& s, const GridAxes& grid, double h,
                                       int jobs) {
    LaplacianComparison out;
    out.reports.resize(grid.size());
    const std::size_t nv = grid.vs.size();
    grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
        LaplacianReport& r = out.reports[i * nv + j];
        r.u = u;
        r.v = v;
        r.h = h;
        r.closed_form = laplacian_closed(s, u, v);
        r.finite_diff = laplacian_fd(s, u, v, h);
        r.defect = (r.closed_form - r.finite_diff).max_abs();
    });
    for (const auto& r : out.reports) out.max_defect = std::max(out.max_defect, r.defect);
    return out;
}

} // namespace meridian
