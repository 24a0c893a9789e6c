#include <doctest.h>

#include <cmath>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/profile.hpp"
#include "meridian/spherical.hpp"

using namespace meridian;

namespace {

FrenetFrame3 std_frame() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

SphericalCurveSpec spec_of(SurfaceKind kind, double kappa, double v_hi, double step) {
    SphericalCurveSpec s;
    s.kind = kind;
    s.kappa = KappaFunction::constant(kappa);
    s.initial = std_frame();
    s.v_hi = v_hi;
    s.step = step;
    return s;
}

} // namespace

TEST_CASE("plane-generating elliptic profile: phi = 0") {
    auto p = make_profile(SurfaceKind::elliptic, Poly1::constant(0.0), 1.0, 0.0, 0.0, 1.0);
    for (double u : {0.0, 0.33, 1.0}) {
        const ProfileSample s = p->at(u);
        CHECK(s.f == doctest::Approx(1.0 + u).epsilon(1e-15));
        CHECK(std::abs(s.g) <= 1e-15);
        CHECK(s.df == 1.0);
        CHECK(s.dg == 0.0);
        CHECK(s.kappa_m == 0.0);
    }
}

TEST_CASE("hyperbolic profile with phi = pi/2: f constant, g linear") {
    auto p = make_profile(SurfaceKind::hyperbolic, Poly1::constant(M_PI / 2.0), 1.0, 0.0, 0.0,
                          1.0);
    const ProfileSample s = p->at(0.7);
    CHECK(std::abs(s.f - 1.0) <= 1e-14);
    CHECK(std::abs(s.g - 0.7) <= 1e-14);
    CHECK(std::abs(s.dg - 1.0) <= 1e-15);
}

TEST_CASE("elliptic phi(u) = u integrates to (sinh, cosh)") {
    Poly1 phi;
    phi.coeffs = {0.0, 1.0};
    auto p = make_profile(SurfaceKind::elliptic, phi, 0.0, 1.0, 0.0, 1.0);
    for (double u : {0.2, 0.5, 0.9}) {
        const ProfileSample s = p->at(u);
        CHECK(std::abs(s.f - std::sinh(u)) <= 1e-13);
        CHECK(std::abs(s.g - std::cosh(u)) <= 1e-13);
        CHECK(std::abs(s.df * s.df - s.dg * s.dg - 1.0) <= 1e-14);
        CHECK(s.kappa_m == doctest::Approx(1.0));
    }
}

TEST_CASE("unit-speed constraint residual vanishes along random-ish profiles") {
    Poly1 phi;
    phi.coeffs = {0.3, -0.4, 0.2};
    auto ell = make_profile(SurfaceKind::elliptic, phi, 1.5, 0.0, 0.0, 1.0);
    auto hyp = make_profile(SurfaceKind::hyperbolic, phi, 1.5, 0.0, 0.0, 1.0);
    for (int i = 0; i <= 40; ++i) {
        const double u = i / 40.0;
        const ProfileSample a = ell->at(u), b = hyp->at(u);
        CHECK(std::abs(a.df * a.df - a.dg * a.dg - 1.0) <= 1e-14);
        CHECK(std::abs(b.df * b.df + b.dg * b.dg - 1.0) <= 1e-14);
    }
}

TEST_CASE("profile curvature equals the finite-difference f'g'' - g'f''") {
    Poly1 phi;
    phi.coeffs = {0.2, 0.7, -0.3, 0.1};
    auto p = make_profile(SurfaceKind::elliptic, phi, 1.0, 0.0, 0.0, 1.0);
    const double h = 1e-4;
    for (double u : {0.2, 0.5, 0.8}) {
        const ProfileSample sp = p->at(u), sm = p->at(u - h), s2 = p->at(u + h);
        const double d2f = (s2.df - sm.df) / (2.0 * h);
        const double d2g = (s2.dg - sm.dg) / (2.0 * h);
        const double km_fd = sp.df * d2g - sp.dg * d2f;
        CHECK(std::abs(profile_curvature(*p, u) - km_fd) <= 1e-7);
    }
    // straight profile: curvature identically zero
    auto lin = make_linear_profile(SurfaceKind::elliptic, 1.25, 0.5, 0.75, 0.0, 0.0, 1.0);
    CHECK(profile_curvature(*lin, 0.4) == 0.0);
}

TEST_CASE("profiles reject f <= 0 and broken slope constraints") {
    CHECK_THROWS_AS(
        make_profile(SurfaceKind::elliptic, Poly1::constant(0.0), -0.5, 0.0, 0.0, 1.0),
        DomainError);
    CHECK_THROWS_AS(make_linear_profile(SurfaceKind::elliptic, 1.2, 1.0, 0.9, 0.0, 0.0, 1.0),
                    DomainError);
    CHECK_THROWS_AS(make_linear_profile(SurfaceKind::elliptic, -1.0, 5.0, 0.0, 0.0, 0.0, 1.0),
                    DomainError);
    CHECK_THROWS_AS(make_constant_f_profile(1.0, 2, 0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_profile(SurfaceKind::elliptic, Poly1::constant(0.0), 1.0, 0.0, 0.0,
                                 1.0)
                        ->at(1.5),
                    DomainError);
}

TEST_CASE("great circle: elliptic kappa = 0") {
    const SphericalCurve c = integrate_spherical(spec_of(SurfaceKind::elliptic, 0.0, 2.0, 1e-3));
    for (double v : {0.0, 0.7, 1.4, 2.0}) {
        const FrenetFrame3 fr = c.frame_at(v);
        CHECK(std::abs(fr.l.a - std::cos(v)) <= 1e-10);
        CHECK(std::abs(fr.l.b - std::sin(v)) <= 1e-10);
        CHECK(std::abs(fr.l.c) <= 1e-12);
        CHECK(std::abs(fr.n.c - 1.0) <= 1e-12);
    }
    CHECK(c.gram_defect() <= 1e-12);
}

TEST_CASE("constant curvature: l traces a circle of radius 1/sqrt(1+kappa^2)") {
    const double kappa = 1.7;
    const double omega = std::sqrt(1.0 + kappa * kappa);
    const SphericalCurve c =
        integrate_spherical(spec_of(SurfaceKind::elliptic, kappa, 2.0, 1e-3));
    // Closed form: m = n + kappa l is a constant vector; l orbits the center
    // kappa m / omega^2 with radius 1/omega.
    const Vec3 l0{1, 0, 0}, t0{0, 1, 0}, n0{0, 0, 1};
    const Vec3 m = n0 + kappa * l0;
    const Vec3 center = (kappa / (omega * omega)) * m;
    for (double v : {0.3, 1.0, 1.9}) {
        const FrenetFrame3 fr = c.frame_at(v);
        const Vec3 expect = center + std::cos(omega * v) * (l0 - center) +
                            (std::sin(omega * v) / omega) * t0;
        CHECK(std::abs(fr.l.a - expect.a) <= 1e-9);
        CHECK(std::abs(fr.l.b - expect.b) <= 1e-9);
        CHECK(std::abs(fr.l.c - expect.c) <= 1e-9);
        CHECK(std::abs(dot3(SurfaceKind::elliptic, fr.l, fr.l) - 1.0) <= 1e-10);
        const double dist = std::sqrt(dot3(SurfaceKind::elliptic, fr.l - center, fr.l - center));
        CHECK(std::abs(dist - 1.0 / omega) <= 1e-9);
    }
}

TEST_CASE("hyperbolic kappa = 0: n constant, Gram defect small") {
    const SphericalCurve c =
        integrate_spherical(spec_of(SurfaceKind::hyperbolic, 0.0, 2.0, 1e-3));
    CHECK(c.gram_defect() <= 1e-8);
    for (const auto& fr : c.samples()) {
        CHECK(std::abs(fr.n.a) <= 1e-10);
        CHECK(std::abs(fr.n.b) <= 1e-10);
        CHECK(std::abs(fr.n.c - 1.0) <= 1e-10);
    }
}

TEST_CASE("hyperbolic Frenet relation t' = -kappa n - l on samples") {
    SphericalCurveSpec spec = spec_of(SurfaceKind::hyperbolic, 0.0, 3.0, 1e-3);
    Poly1 kp;
    kp.coeffs = {1.3, -0.2};
    spec.kappa = KappaFunction::poly(kp);
    const SphericalCurve c = integrate_spherical(spec);
    const auto& rows = c.samples();
    const double h = c.step();
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < rows.size(); i += 7) {
        const Vec3 tp = (1.0 / (12.0 * h)) * (-1.0 * rows[i + 2].t + 8.0 * rows[i + 1].t -
                                              8.0 * rows[i - 1].t + rows[i - 2].t);
        const double kappa = c.kappa(c.v_lo() + h * static_cast<double>(i));
        const Vec3 res = tp + kappa * rows[i].n + rows[i].l;
        worst = std::max({worst, std::abs(res.a), std::abs(res.b), std::abs(res.c)});
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("gram defect: long run stays small, halving the step gains ~16x") {
    const SphericalCurve c10 =
        integrate_spherical(spec_of(SurfaceKind::elliptic, 1.3, 10.0, 1e-3));
    CHECK(c10.gram_defect() <= 1e-8);

    const double d1 = integrate_spherical(spec_of(SurfaceKind::elliptic, 1.3, 6.0, 4e-3)).gram_defect();
    const double d2 = integrate_spherical(spec_of(SurfaceKind::elliptic, 1.3, 6.0, 2e-3)).gram_defect();
    const double ratio = d1 / d2;
    CHECK(ratio >= 8.0);
    CHECK(ratio <= 32.0);
}

TEST_CASE("gram defect reflects an injected perturbation") {
    SphericalCurve c = integrate_spherical(spec_of(SurfaceKind::elliptic, 0.0, 1.0, 1e-3));
    std::vector<FrenetFrame3> rows = c.samples();
    const double eps = 1e-5;
    rows[rows.size() / 2].l.a += eps;
    const double defect = gram_defect(SurfaceKind::elliptic, rows);
    CHECK(defect >= eps);        // 2 l.a delta + O(delta^2) on the diagonal entry
    CHECK(defect <= 3.0 * eps);
}

TEST_CASE("bad initial frames are rejected") {
    SphericalCurveSpec spec = spec_of(SurfaceKind::elliptic, 0.0, 1.0, 1e-3);
    spec.initial.l = {1.0 + 1e-6, 0, 0};
    CHECK_THROWS_AS(integrate_spherical(spec), FrameError);

    // hyperbolic target has <n,n> = -1; a Euclidean-normalized n is invalid
    SphericalCurveSpec hyp = spec_of(SurfaceKind::hyperbolic, 0.0, 1.0, 1e-3);
    hyp.initial.n = {1, 0, 0};
    CHECK_THROWS_AS(integrate_spherical(hyp), FrameError);
}

TEST_CASE("callable kappa falls back to finite-difference derivatives") {
    const KappaFunction k = KappaFunction::callable([](double v) { return std::sin(v); });
    CHECK(std::abs(k.value(0.4) - std::sin(0.4)) == 0.0);
    CHECK(std::abs(k.derivative(0.4) - std::cos(0.4)) <= 1e-9);
}
