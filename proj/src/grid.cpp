#include "meridian/grid.hpp"

#include "meridian/errors.hpp"
#include "meridian/surface.hpp"

namespace meridian {

GridAxes make_axes(double u_lo, double u_hi, double v_lo, double v_hi, int nu, int nv,
                   double margin) {
    if (nu < 1 || nv < 1) throw DomainError("grid needs at least one point per axis");
    const double ua = u_lo + margin, ub = u_hi - margin;
    const double va = v_lo + margin, vb = v_hi - margin;
    if (!(ub >= ua) || !(vb >= va)) throw DomainError("grid margin exceeds the domain");
    GridAxes g;
    g.us.reserve(nu);
    g.vs.reserve(nv);
    for (int i = 0; i < nu; ++i)
        g.us.push_back(nu == 1 ? 0.5 * (ua + ub) : ua + (ub - ua) * i / (nu - 1));
    for (int j = 0; j < nv; ++j)
        g.vs.push_back(nv == 1 ? 0.5 * (va + vb) : va + (vb - va) * j / (nv - 1));
    return g;
}

GridAxes make_axes(const MeridianSurface& s, int nu, int nv, double margin) {
    return make_axes(s.u_lo(), s.u_hi(), s.v_lo(), s.v_hi(), nu, nv, margin);
}

} // namespace meridian
