#include "meridian/surface.hpp"

#include <cmath>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

// Elliptic base vectors live in span{e1,e2,e3}; hyperbolic ones in
// span{e2,e3,e4} with coordinates ordered (e2,e3,e4).
SpacetimeVector embed3(SurfaceKind kind, const Vec3& w) {
    if (kind == SurfaceKind::elliptic) return {w.a, w.b, w.c, 0.0};
    return {0.0, w.a, w.b, w.c};
}

SpacetimeVector axis(SurfaceKind kind) {
    if (kind == SurfaceKind::elliptic) return {0.0, 0.0, 0.0, 1.0};
    return {1.0, 0.0, 0.0, 0.0};
}

} // namespace

double FrameAtPoint::orthonormality_defect() const {
    const SpacetimeVector* vs[4] = {&x, &y, &n1, &n2};
    const double target[4] = {1.0, 1.0, 1.0, -1.0};
    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double want = (i == j) ? target[i] : 0.0;
            defect = std::max(defect, std::abs(inner4(*vs[i], *vs[j]) - want));
        }
    return defect;
}

MeridianSurface::MeridianSurface(std::shared_ptr<const ProfileCurve> profile,
                                 SphericalCurve base)
    : kind_(profile->kind()), profile_(std::move(profile)), base_(std::move(base)) {
    if (kind_ != base_.kind())
        throw DomainError("profile and base curve kinds disagree");
}

MeridianSurface MeridianSurface::with_isometry(const Isometry& q) const {
    MeridianSurface s = *this;
    s.motion_ = motion_ ? q.compose(*motion_) : q;
    return s;
}

SpacetimeVector MeridianSurface::immersion(double u, double v) const {
    const ProfileSample ps = profile_->at(u);
    const FrenetFrame3 fr = base_.frame_at(v);
    SpacetimeVector z = ps.f * embed3(kind_, fr.l) + ps.g * axis(kind_);
    return motion_ ? motion_->apply(z) : z;
}

SurfacePoint MeridianSurface::point(double u, double v) const {
    SurfacePoint p;
    p.u = u;
    p.v = v;
    p.prof = profile_->at(u);
    p.kappa = base_.kappa(v);
    p.dkappa = base_.dkappa(v);

    const FrenetFrame3 fr = base_.frame_at(v);
    const SpacetimeVector l = embed3(kind_, fr.l);
    const SpacetimeVector t = embed3(kind_, fr.t);
    const SpacetimeVector n = embed3(kind_, fr.n);
    const SpacetimeVector ax = axis(kind_);

    FrameAtPoint& f = p.frame;
    f.u = u;
    f.v = v;
    f.x = p.prof.df * l + p.prof.dg * ax;
    f.y = t;
    if (kind_ == SurfaceKind::elliptic) {
        f.n1 = n;
        f.n2 = p.prof.dg * l + p.prof.df * ax;
    } else {
        f.n1 = p.prof.dg * l - p.prof.df * ax;
        f.n2 = n;
    }
    if (motion_) {
        f.x = motion_->apply(f.x);
        f.y = motion_->apply(f.y);
        f.n1 = motion_->apply(f.n1);
        f.n2 = motion_->apply(f.n2);
    }
    return p;
}

FrameAtPoint MeridianSurface::frame(double u, double v) const { return point(u, v).frame; }

MeridianSurface::FirstForm MeridianSurface::first_form(double u, double v) const {
    const ProfileSample ps = profile_->at(u);
    const FrenetFrame3 fr = base_.frame_at(v);
    const SpacetimeVector zu = ps.df * embed3(kind_, fr.l) + ps.dg * axis(kind_);
    const SpacetimeVector zv = ps.f * embed3(kind_, fr.t);
    return {inner4(zu, zu), inner4(zu, zv), inner4(zv, zv)};
}

SpacetimeVector mean_curvature_vector(const SurfacePoint& p, SurfaceKind kind) {
    const double f = p.prof.f;
    const double a = p.prof.kappa_m + p.prof.dg / f;
    const double b = p.kappa / f;
    if (kind == SurfaceKind::elliptic)
        return 0.5 * (b * p.frame.n1 + a * p.frame.n2);
    return -0.5 * (a * p.frame.n1 + b * p.frame.n2);
}

Bivector gauss_map(const SurfacePoint& p) { return wedge(p.frame.x, p.frame.y); }

Bivector laplacian_closed(const SurfacePoint& p, SurfaceKind kind) {
    const double f = p.prof.f;
    const double f2 = f * f;
    const double dg = p.prof.dg;
    const double df = p.prof.df;
    const double km = p.prof.kappa_m;
    const double dfkm = p.prof.d_f_kappa_m();
    const double k = p.kappa, dk = p.dkappa;

    const FrameAtPoint& fr = p.frame;
    if (kind == SurfaceKind::elliptic) {
        const double a_xy = (k * k - dg * dg - f2 * km * km) / f2;
        const double a_xn1 = -dk / f2;
        const double a_yn1 = -k * df / f2;
        const double a_yn2 = (f * dfkm - df * dg) / f2;
        return a_xy * wedge(fr.x, fr.y) + a_xn1 * wedge(fr.x, fr.n1) +
               a_yn1 * wedge(fr.y, fr.n1) + a_yn2 * wedge(fr.y, fr.n2);
    }
    const double a_xy = (-k * k + dg * dg + f2 * km * km) / f2;
    const double a_xn2 = dk / f2;
    const double a_yn1 = (df * dg - f * dfkm) / f2;
    const double a_yn2 = k * df / f2;
    return a_xy * wedge(fr.x, fr.y) + a_xn2 * wedge(fr.x, fr.n2) +
           a_yn1 * wedge(fr.y, fr.n1) + a_yn2 * wedge(fr.y, fr.n2);
}

SpacetimeVector mean_curvature_vector(const MeridianSurface& s, double u, double v) {
    return mean_curvature_vector(s.point(u, v), s.kind());
}

Bivector gauss_map(const MeridianSurface& s, double u, double v) {
    return gauss_map(s.point(u, v));
}

Bivector laplacian_closed(const MeridianSurface& s, double u, double v) {
    return laplacian_closed(s.point(u, v), s.kind());
}

} // namespace meridian
