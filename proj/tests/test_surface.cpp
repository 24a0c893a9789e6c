#include <doctest.h>

#include <cmath>

#include "meridian/isometry.hpp"
#include "meridian/surface.hpp"

using namespace meridian;

namespace {

SphericalCurve base_curve(SurfaceKind kind, double kappa, double v_hi = 1.2,
                          double step = 1e-4) {
    SphericalCurveSpec spec;
    spec.kind = kind;
    spec.kappa = KappaFunction::constant(kappa);
    spec.initial = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    spec.v_hi = v_hi;
    spec.step = step;
    return integrate_spherical(spec);
}

MeridianSurface elliptic_plane() {
    auto prof = make_profile(SurfaceKind::elliptic, Poly1::constant(0.0), 1.0, 0.0, 0.0, 1.0);
    return MeridianSurface(prof, base_curve(SurfaceKind::elliptic, 0.0, 1.5));
}

MeridianSurface hyperbolic_ruled(double a, int g_slope, double kappa) {
    auto prof = make_constant_f_profile(a, g_slope, 0.0, 0.0, 1.0);
    return MeridianSurface(prof, base_curve(SurfaceKind::hyperbolic, kappa));
}

MeridianSurface generic_elliptic() {
    Poly1 phi;
    phi.coeffs = {0.3, 0.5, -0.2};
    auto prof = make_profile(SurfaceKind::elliptic, phi, 1.2, 0.0, 0.0, 1.0);
    return MeridianSurface(prof, base_curve(SurfaceKind::elliptic, 1.4));
}

MeridianSurface generic_hyperbolic() {
    Poly1 phi;
    phi.coeffs = {0.4, 0.6, -0.3};
    auto prof = make_profile(SurfaceKind::hyperbolic, phi, 2.0, 0.0, 0.0, 1.0);
    return MeridianSurface(prof, base_curve(SurfaceKind::hyperbolic, 1.5, 1.0));
}

double norm_inf(const SpacetimeVector& v) { return v.max_abs(); }

} // namespace

TEST_CASE("immersion anchors") {
    const MeridianSurface plane = elliptic_plane();
    const SpacetimeVector z = plane.immersion(0.0, 0.0);
    CHECK(norm_inf(z - SpacetimeVector{1, 0, 0, 0}) <= 1e-14);

    const MeridianSurface ruled = hyperbolic_ruled(1.0, 1, 2.0);
    for (double u : {0.1, 0.6}) {
        const auto ff = ruled.first_form(u, 0.4);
        CHECK(std::abs(ff.e - 1.0) <= 1e-10);       // <z_u, z_u> = 1
        CHECK(std::abs(ff.f) <= 1e-10);             // F = 0
        CHECK(std::abs(ff.metric_coefficient - 1.0) <= 1e-10); // f = 1 here
        // axis slot carries g(u) = u
        CHECK(std::abs(ruled.immersion(u, 0.4).x1 - u) <= 1e-14);
    }
}

TEST_CASE("metric coefficient is f^2 on generic surfaces") {
    for (const MeridianSurface& s : {generic_elliptic(), generic_hyperbolic()}) {
        for (double u : {0.2, 0.8})
            for (double v : {0.3, 0.9}) {
                const double f = s.profile().at(u).f;
                const auto ff = s.first_form(u, v);
                CHECK(std::abs(ff.e - 1.0) <= 1e-9);
                CHECK(std::abs(ff.f) <= 1e-9);
                CHECK(std::abs(ff.metric_coefficient - f * f) <= 1e-9 * f * f);
            }
    }
}

TEST_CASE("frame anchors: straight profiles pin a normal to the axis") {
    const MeridianSurface plane = elliptic_plane();
    const FrameAtPoint fr = plane.frame(0.3, 0.8);
    CHECK(norm_inf(fr.n2 - SpacetimeVector{0, 0, 0, 1}) <= 1e-14); // n2 = e4 when g' = 0

    const MeridianSurface ruled = hyperbolic_ruled(1.0, 1, 2.0);
    const FrameAtPoint fh = ruled.frame(0.3, 0.5);
    CHECK(norm_inf(fh.x - SpacetimeVector{1, 0, 0, 0}) <= 1e-14); // x = g' e1
    // n1 = g' l - f' e1 = l, embedded in span{e2,e3,e4}
    const FrenetFrame3 c = ruled.base().frame_at(0.5);
    CHECK(norm_inf(fh.n1 - SpacetimeVector{0, c.l.a, c.l.b, c.l.c}) <= 1e-12);
}

TEST_CASE("frames are orthonormal with signs (+,+,+,-)") {
    for (const MeridianSurface& s : {generic_elliptic(), generic_hyperbolic()})
        for (double u : {0.1, 0.5, 0.9})
            for (double v : {0.2, 0.7})
                CHECK(s.frame(u, v).orthonormality_defect() <= 1e-9);
}

TEST_CASE("mean curvature vector anchors") {
    // totally geodesic plane
    CHECK(norm_inf(mean_curvature_vector(elliptic_plane(), 0.4, 0.6)) <= 1e-12);

    // hyperbolic ruled with kappa = eps g': H = -(1/2a)(g' n1 + kappa n2), lightlike
    const double a = 1.3;
    for (int gs : {1, -1})
        for (int ks : {1, -1}) {
            const MeridianSurface s = hyperbolic_ruled(a, gs, ks);
            const SurfacePoint p = s.point(0.5, 0.7);
            const SpacetimeVector h = mean_curvature_vector(p, s.kind());
            const SpacetimeVector expect =
                (-0.5 / a) * (static_cast<double>(gs) * p.frame.n1 +
                              static_cast<double>(ks) * p.frame.n2);
            CHECK(norm_inf(h - expect) <= 1e-12);
            CHECK(std::abs(inner4(h, h)) <= 1e-12);
            CHECK(norm_inf(h) > 0.1 / a);
        }

    // elliptic linear profile with kappa = eps b: H = (b/2f)(eps n1 + n2), lightlike
    const double aa = std::cosh(0.6), bb = std::sinh(0.6);
    auto prof = make_linear_profile(SurfaceKind::elliptic, aa, 1.4, bb, 0.0, 0.0, 1.0);
    const MeridianSurface lin(prof, base_curve(SurfaceKind::elliptic, bb));
    const SurfacePoint p = lin.point(0.4, 0.9);
    const SpacetimeVector h = mean_curvature_vector(p, lin.kind());
    const SpacetimeVector expect = (bb / (2.0 * p.prof.f)) * (p.frame.n1 + p.frame.n2);
    CHECK(norm_inf(h - expect) <= 1e-12);
    CHECK(std::abs(inner4(h, h)) <= 1e-14);
}

TEST_CASE("gauss map: unit norm and orthogonality to the normal wedges") {
    for (const MeridianSurface& s : {generic_elliptic(), generic_hyperbolic()})
        for (double u : {0.15, 0.75})
            for (double v : {0.25, 0.85}) {
                const SurfacePoint p = s.point(u, v);
                const Bivector g = gauss_map(p);
                CHECK(std::abs(inner_biv(g, g) - 1.0) <= 1e-9);
                CHECK(std::abs(inner_biv(g, wedge(p.frame.x, p.frame.n1))) <= 1e-9);
            }

    // hyperbolic f = 1, g = u: G = e1 ^ t(v)
    const MeridianSurface ruled = hyperbolic_ruled(1.0, 1, 2.0);
    const SurfacePoint p = ruled.point(0.3, 0.6);
    const FrenetFrame3 c = ruled.base().frame_at(0.6);
    const Bivector expect = wedge({1, 0, 0, 0}, {0, c.t.a, c.t.b, c.t.c});
    CHECK((gauss_map(p) - expect).max_abs() <= 1e-12);

    // elliptic plane at v = 0: G = e1 ^ e2
    const Bivector g0 = gauss_map(elliptic_plane(), 0.2, 0.0);
    CHECK(std::abs(g0.c12 - 1.0) <= 1e-12);
    CHECK(std::abs(g0.c13) + std::abs(g0.c14) + std::abs(g0.c23) + std::abs(g0.c24) +
              std::abs(g0.c34) <=
          1e-12);
}

TEST_CASE("closed-form Laplacian anchors") {
    CHECK(laplacian_closed(elliptic_plane(), 0.5, 0.7).max_abs() <= 1e-14);

    const MeridianSurface ruled = hyperbolic_ruled(1.0, 1, 2.0);
    const SurfacePoint p = ruled.point(0.4, 0.8);
    const Bivector dg = laplacian_closed(p, ruled.kind());
    CHECK((dg - (-3.0) * wedge(p.frame.x, p.frame.y)).max_abs() <= 1e-12);

    // elliptic f = u on [1,2], g const, kappa = 2, at u = 1: 4 x^y - 2 y^n1
    auto prof = make_linear_profile(SurfaceKind::elliptic, 1.0, 0.0, 0.0, 3.0, 1.0, 2.0);
    const MeridianSurface cone(prof, base_curve(SurfaceKind::elliptic, 2.0));
    const SurfacePoint q = cone.point(1.0, 0.5);
    const Bivector expect =
        4.0 * wedge(q.frame.x, q.frame.y) - 2.0 * wedge(q.frame.y, q.frame.n1);
    CHECK((laplacian_closed(q, cone.kind()) - expect).max_abs() <= 1e-12);
}

TEST_CASE("frame derivative formulas hold under finite differences") {
    const double h = 1e-4;
    for (const MeridianSurface& s : {generic_elliptic(), generic_hyperbolic()}) {
        const bool ell = s.kind() == SurfaceKind::elliptic;
        for (double u : {0.3, 0.7})
            for (double v : {0.4, 0.8}) {
                const SurfacePoint p = s.point(u, v);
                const double f = p.prof.f;
                const FrameAtPoint up = s.frame(u + h, v), um = s.frame(u - h, v);
                const FrameAtPoint vp = s.frame(u, v + h), vm = s.frame(u, v - h);

                const SpacetimeVector dux = (up.x - um.x) * (0.5 / h);
                const SpacetimeVector pred =
                    ell ? p.prof.kappa_m * p.frame.n2 : (-p.prof.kappa_m) * p.frame.n1;
                CHECK(norm_inf(dux - pred) <= 1e-6);

                const SpacetimeVector dvy = (vp.y - vm.y) * (0.5 / (h * f));
                const SpacetimeVector pred_vy =
                    ell ? (-p.prof.df / f) * p.frame.x + (p.kappa / f) * p.frame.n1 +
                              (p.prof.dg / f) * p.frame.n2
                        : (-p.prof.df / f) * p.frame.x + (-p.prof.dg / f) * p.frame.n1 +
                              (-p.kappa / f) * p.frame.n2;
                CHECK(norm_inf(dvy - pred_vy) <= 1e-6);
            }
    }
}

TEST_CASE("a rigid motion transports immersion, frame, and Gauss map") {
    const Isometry q = random_isometry(7);
    const MeridianSurface s = generic_elliptic();
    const MeridianSurface moved = s.with_isometry(q);
    const double u = 0.4, v = 0.6;

    CHECK(norm_inf(moved.immersion(u, v) - q.apply(s.immersion(u, v))) <= 1e-12);
    const FrameAtPoint fr = moved.frame(u, v);
    CHECK(fr.orthonormality_defect() <= 1e-9);

    const Bivector g_moved = gauss_map(moved, u, v);
    CHECK(std::abs(inner_biv(g_moved, g_moved) - 1.0) <= 1e-9);
    // intrinsic quantity: |Delta G| is unchanged
    const double a = laplacian_closed(s, u, v).max_abs();
    const double b = laplacian_closed(moved, u, v).max_abs();
    const double na = std::abs(inner_biv(laplacian_closed(s, u, v), gauss_map(s, u, v)));
    const double nb =
        std::abs(inner_biv(laplacian_closed(moved, u, v), gauss_map(moved, u, v)));
    CHECK(std::abs(na - nb) <= 1e-9 * (1.0 + na));
    CHECK(a > 0.0);
    CHECK(b > 0.0);
}
