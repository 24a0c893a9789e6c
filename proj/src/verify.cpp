#include "meridian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "meridian/classify.hpp"
#include "meridian/errors.hpp"
#include "meridian/laplacian_fd.hpp"
#include "meridian/ode.hpp"
#include "meridian/surface.hpp"

namespace meridian {

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    double signed_uniform(double lo, double hi) {
        return (gen() & 1 ? 1.0 : -1.0) * uniform(lo, hi);
    }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[192];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

FrenetFrame3 standard_frame() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

SphericalCurve make_base(SurfaceKind kind, double kappa, double v_hi, double step) {
    SphericalCurveSpec spec;
    spec.kind = kind;
    spec.kappa = KappaFunction::constant(kappa);
    spec.initial = standard_frame();
    spec.v_lo = 0.0;
    spec.v_hi = v_hi;
    spec.step = step;
    return integrate_spherical(spec);
}

// Random surface for the oracle comparisons: polynomial slope angle of degree
// <= 3, constant spherical curvature in [-3, 3]. The v-span shrinks with the
// hyperbolic Frenet growth rate so the finite-difference truncation stays in
// budget at h = 1e-3.
MeridianSurface random_surface(SurfaceKind kind, Rng& rng, double curve_step,
                               double* v_hi_out = nullptr) {
    Poly1 phi;
    phi.coeffs = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3),
                  rng.uniform(-0.2, 0.2)};
    const double kappa = rng.uniform(-3.0, 3.0);

    double f0, u_hi, v_hi;
    if (kind == SurfaceKind::elliptic) {
        f0 = rng.uniform(1.0, 2.0);
        u_hi = 1.0;
        v_hi = 1.2;
    } else {
        f0 = rng.uniform(2.0, 2.5);
        u_hi = 0.8;
        const double growth = std::sqrt(std::max(kappa * kappa - 1.0, 0.0));
        v_hi = std::min(1.2, 2.2 / std::max(growth, 1.0));
    }
    auto profile = make_profile(kind, phi, f0, 0.0, 0.0, u_hi);
    if (v_hi_out) *v_hi_out = v_hi;
    return MeridianSurface(profile, make_base(kind, kappa, v_hi, curve_step));
}

// Profile with f * kappa_m held constant: slope angle obeys phi' = a / f.
// This is the excluded constant-f*kappa_m configuration of the second-kind
// taxonomy; integrated here directly with RK4.
std::shared_ptr<const ProfileCurve> constant_fkm_profile(SurfaceKind kind, double a, double f0,
                                                         double phi0, double u_hi,
                                                         double step) {
    const bool ell = kind == SurfaceKind::elliptic;
    struct Y {
        double f, g, phi;
    };
    auto rhs = [&](const Y& y) {
        return Y{ell ? std::cosh(y.phi) : std::cos(y.phi),
                 ell ? std::sinh(y.phi) : std::sin(y.phi), a / y.f};
    };
    const auto n = static_cast<std::size_t>(std::ceil(u_hi / step - 1e-9));
    const double h = u_hi / static_cast<double>(n);
    std::vector<ProfileSample> rows;
    rows.reserve(n + 1);
    Y y{f0, 0.0, phi0};
    auto push = [&](const Y& s) {
        ProfileSample p;
        p.f = s.f;
        p.g = s.g;
        p.df = ell ? std::cosh(s.phi) : std::cos(s.phi);
        p.dg = ell ? std::sinh(s.phi) : std::sin(s.phi);
        p.kappa_m = a / s.f;
        p.d2f = (ell ? 1.0 : -1.0) * p.kappa_m * p.dg;
        p.d2g = p.kappa_m * p.df;
        p.dkappa_m = -a * p.df / (s.f * s.f);
        rows.push_back(p);
    };
    push(y);
    for (std::size_t i = 0; i < n; ++i) {
        const Y k1 = rhs(y);
        const Y k2 = rhs({y.f + 0.5 * h * k1.f, y.g + 0.5 * h * k1.g, y.phi + 0.5 * h * k1.phi});
        const Y k3 = rhs({y.f + 0.5 * h * k2.f, y.g + 0.5 * h * k2.g, y.phi + 0.5 * h * k2.phi});
        const Y k4 = rhs({y.f + h * k3.f, y.g + h * k3.g, y.phi + h * k3.phi});
        y.f += (h / 6.0) * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
        y.g += (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
        y.phi += (h / 6.0) * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
        push(y);
    }
    return make_sampled_profile(kind, 0.0, h, std::move(rows));
}

// --- criterion 1: closed form vs finite-difference oracle -------------------

CriterionResult criterion1(int jobs) {
    const double h = 1e-3;
    const double curve_step = (h / 2.0) / 10.0; // serves both halving levels
    double max_defect_h = 0.0, max_defect_h2 = 0.0;

    for (int k = 0; k < 40; ++k) {
        const SurfaceKind kind = k < 20 ? SurfaceKind::elliptic : SurfaceKind::hyperbolic;
        Rng rng(1000 + static_cast<std::uint64_t>(k));
        const MeridianSurface s = random_surface(kind, rng, curve_step);
        const GridAxes grid = make_axes(s, 50, 50, 0.02);
        max_defect_h = std::max(max_defect_h, compare_laplacians(s, grid, h, jobs).max_defect);
        max_defect_h2 =
            std::max(max_defect_h2, compare_laplacians(s, grid, h / 2.0, jobs).max_defect);
    }
    const double order = std::log2(max_defect_h / max_defect_h2);
    const bool pass = max_defect_h <= 1e-4 && order >= 1.8 && order <= 2.2;
    return {1, "oracle agreement on 40 random surfaces", pass,
            fmt("max_defect=%.3e (<=1e-4), order=%.3f (in [1.8,2.2])", max_defect_h, order)};
}

// --- criterion 2: elliptic harmonic = plane ---------------------------------

CriterionResult criterion2(int jobs) {
    auto plane_profile = make_profile(SurfaceKind::elliptic, Poly1::constant(0.0), 1.0, 0.0,
                                      0.0, 1.0);
    const MeridianSurface plane(plane_profile,
                                make_base(SurfaceKind::elliptic, 0.0, 1.5, 1e-4));
    const GridAxes grid = make_axes(plane, 50, 50, 0.02);
    const HarmonicCheck clean = is_harmonic(plane, grid, 1e-8, jobs);

    double min_violation = 1e300;
    for (int k = 0; k < 10; ++k) {
        Rng rng(2000 + static_cast<std::uint64_t>(k));
        double kappa = 0.0;
        Poly1 phi = Poly1::constant(0.0);
        switch (k % 3) {
            case 0: kappa = rng.signed_uniform(0.5, 2.5); break;
            case 1: phi = Poly1::constant(rng.signed_uniform(0.3, 1.2)); break;
            default: phi.coeffs = {0.0, rng.signed_uniform(0.5, 1.5)}; break;
        }
        auto prof = make_profile(SurfaceKind::elliptic, phi, 1.0, 0.0, 0.0, 1.0);
        const MeridianSurface s(prof, make_base(SurfaceKind::elliptic, kappa, 1.5, 1e-4));
        const HarmonicCheck broken = is_harmonic(s, make_axes(s, 30, 30, 0.02), 1e-8, jobs);
        min_violation = std::min(min_violation, broken.max_defect);
    }
    const bool pass = clean.flag && clean.max_defect <= 1e-8 && min_violation >= 1e-3;
    return {2, "elliptic harmonic iff plane", pass,
            fmt("plane_defect=%.3e (<=1e-8), min_violation=%.3e (>=1e-3)", clean.max_defect,
                min_violation)};
}

// --- criterion 3: hyperbolic ruled harmonic family --------------------------

CriterionResult criterion3(int jobs) {
    const double a = 1.3, b = 0.2;
    double worst_harmonic = 0.0, worst_hh = 0.0, min_h_norm = 1e300, worst_dev = 0.0;
    for (int gs : {1, -1})
        for (int ks : {1, -1}) {
            auto prof = make_constant_f_profile(a, gs, b, 0.0, 1.0);
            const MeridianSurface s(
                prof, make_base(SurfaceKind::hyperbolic, static_cast<double>(ks), 1.5, 1e-4));
            const GridAxes grid = make_axes(s, 40, 40, 0.02);
            worst_harmonic = std::max(worst_harmonic, is_harmonic(s, grid, 1e-8, jobs).max_defect);
            const CheckResult mt = marginally_trapped_check(s, grid, 1e-10, jobs);
            worst_hh = std::max(worst_hh, mt.defect);
            min_h_norm = std::min(min_h_norm, mt.aux);
            worst_dev = std::max(worst_dev, developable_check(s, grid, 1e-8, jobs).defect);
        }
    const bool pass = worst_harmonic <= 1e-8 && worst_hh <= 1e-10 &&
                      min_h_norm > 1.0 / (8.0 * a) && worst_dev <= 1e-8;
    return {3, "hyperbolic constant-f, kappa = +-1: harmonic, trapped, developable", pass,
            fmt("harmonic=%.3e (<=1e-8), <H,H>=%.3e (<=1e-10), developable=%.3e (<=1e-8)",
                worst_harmonic, worst_hh, worst_dev)};
}

// --- criterion 4: hyperbolic first-kind anchor (a=1, kappa=2) ---------------

CriterionResult criterion4(int) {
    auto prof = make_constant_f_profile(1.0, 1, 0.0, 0.0, 1.0);
    const MeridianSurface s(prof, make_base(SurfaceKind::hyperbolic, 2.0, 1.2, 1e-4));
    const GridAxes grid = make_axes(s, 50, 50, 0.02);

    double lambda_err = 0.0, residual = 0.0;
    bool all = true;
    grid_for_each_serial(grid, [&](std::size_t, std::size_t, double u, double v) {
        const auto lam = first_kind_lambda(s, u, v, 1e-8);
        if (!lam) {
            all = false;
            return;
        }
        lambda_err = std::max(lambda_err, std::abs(*lam - (-3.0)));
        const SurfacePoint p = s.point(u, v);
        residual = std::max(
            residual, (laplacian_closed(p, s.kind()) - *lam * gauss_map(p)).max_abs());
    });

    bool hp_ok = false;
    double theta_err = 1e300, hp_defect = 1e300;
    try {
        const HyperplaneResult hp = hyperplane_check(s, grid, HyperplaneType::e31, 1e-8);
        hp_ok = hp.flag;
        theta_err = std::abs(hp.theta - 0.5 * std::log(3.0));
        hp_defect = hp.defect;
    } catch (const Error&) {
        hp_ok = false;
    }
    const bool pass = all && lambda_err <= 1e-8 && residual <= 1e-8 && hp_ok &&
                      theta_err <= 1e-12 && hp_defect <= 1e-8;
    return {4, "hyperbolic anchor: lambda = -3, hyperplane E31 at theta = ln(3)/2", pass,
            fmt("lambda_err=%.3e (<=1e-8), residual=%.3e (<=1e-8), hyperplane=%.3e (<=1e-8)",
                lambda_err, residual, hp_defect)};
}

// --- criterion 5: ODE-generated first-kind surfaces -------------------------

CriterionResult criterion5(int) {
    double worst_residual = 0.0, worst_c = 0.0, worst_ode = 0.0;
    bool all = true;
    for (SurfaceKind kind : {SurfaceKind::elliptic, SurfaceKind::hyperbolic}) {
        const bool ell = kind == SurfaceKind::elliptic;
        const OdeSolution sol = ell ? solve_first_kind(kind, 1.0, 0.6, 0.3, 0.0, 1.0, 1e-4)
                                    : solve_first_kind(kind, 1.5, 0.9, 0.2, 0.0, 1.0, 1e-4);
        worst_ode = std::max(worst_ode, sol.residual_max);
        const MeridianSurface s(profile_from_solution(sol),
                                make_base(kind, 0.0, ell ? 1.5 : 1.2, 1e-4));
        const GridAxes grid = make_axes(s, 30, 30, 0.03);
        grid_for_each_serial(grid, [&](std::size_t, std::size_t, double u, double v) {
            const auto lam = first_kind_lambda(s, u, v, 1e-5);
            if (!lam) {
                all = false;
                return;
            }
            const SurfacePoint p = s.point(u, v);
            const Bivector dg = laplacian_closed(p, kind);
            worst_residual = std::max(worst_residual, (dg - *lam * gauss_map(p)).max_abs());
            worst_c = std::max(worst_c, (dg * (1.0 / *lam) - gauss_map(p)).max_abs());
        });
    }
    const bool pass = all && worst_residual <= 1e-5 && worst_c <= 1e-6 && worst_ode <= 1e-6;
    return {5, "first-kind ODE profiles: Delta G = lambda G with C = 0", pass,
            fmt("residual=%.3e (<=1e-5), |C|=%.3e (<=1e-6), ode_residual=%.3e (<=1e-6)",
                worst_residual, worst_c, worst_ode)};
}

// --- criterion 6: elliptic second-kind anchor -------------------------------

struct Criterion6Outcome {
    CriterionResult result;
    double noise_floor = 0.0;
};

Criterion6Outcome criterion6(int jobs) {
    auto prof = make_linear_profile(SurfaceKind::elliptic, 1.0, 1.0, 0.0, 0.0, 0.5, 1.5);
    const MeridianSurface s(prof, make_base(SurfaceKind::elliptic, 2.0, 1.3, 1e-4));
    const GridAxes grid = make_axes(s, 50, 50, 0.02);

    const auto lambda = [](const SurfacePoint& p) {
        return lambda_case1(SurfaceKind::elliptic, 2.0, p.prof.f);
    };
    const SecondKindExtract ext = second_kind_extract(s, grid, lambda, 1e-5, jobs);

    // Expected C = -(1/5)(x^y + 2 f' y^n1), constant in ambient coordinates.
    double match_err = 0.0;
    grid_for_each_serial(grid, [&](std::size_t, std::size_t, double u, double v) {
        const SurfacePoint p = s.point(u, v);
        const Bivector expected =
            (-1.0 / 5.0) *
            (wedge(p.frame.x, p.frame.y) + 2.0 * p.prof.df * wedge(p.frame.y, p.frame.n1));
        const Bivector actual =
            laplacian_closed(p, s.kind()) * (1.0 / lambda(p)) - gauss_map(p);
        match_err = std::max(match_err, (actual - expected).max_abs());
    });

    const bool pass = ext.constancy_defect <= 1e-6 && match_err <= 1e-6;
    Criterion6Outcome out;
    out.result = {6, "elliptic second-kind anchor: lambda = 5/f^2, explicit constant C", pass,
                  fmt("constancy=%.3e (<=1e-6), match=%.3e (<=1e-6)", ext.constancy_defect,
                      match_err)};
    out.noise_floor = ext.constancy_defect;
    return out;
}

// --- criterion 7: linear profiles, trapped or hyperplane by kappa^2 - b^2 ---

CriterionResult criterion7(int jobs) {
    double worst_trap = 0.0, worst_hp = 0.0;
    bool ok = true;

    struct Setup {
        SurfaceKind kind;
        double a, b, a1;
    };
    const Setup setups[2] = {{SurfaceKind::elliptic, std::cosh(0.75), std::sinh(0.75), 1.6},
                             {SurfaceKind::hyperbolic, std::cos(0.6), std::sin(0.6), 1.5}};
    for (const Setup& cfg : setups) {
        auto make = [&](double kappa) {
            auto prof = make_linear_profile(cfg.kind, cfg.a, cfg.a1, cfg.b, 0.0, 0.0, 1.0);
            return MeridianSurface(prof, make_base(cfg.kind, kappa, 1.2, 1e-4));
        };
        for (double kappa : {cfg.b, -cfg.b}) {
            const MeridianSurface s = make(kappa);
            const CheckResult mt =
                marginally_trapped_check(s, make_axes(s, 40, 40, 0.02), 1e-10, jobs);
            worst_trap = std::max(worst_trap, mt.defect);
            ok = ok && mt.flag;
        }
        // |kappa| > |b| and |kappa| < |b| sit in opposite hyperplane types,
        // swapped between the elliptic and hyperbolic kinds.
        const bool ell = cfg.kind == SurfaceKind::elliptic;
        const double k_big = ell ? 2.0 : 1.4;
        const double k_small = ell ? 0.4 : 0.3;
        for (double kappa : {k_big, k_small}) {
            const bool big = kappa == k_big;
            const HyperplaneType target = (big == ell) ? HyperplaneType::e3 : HyperplaneType::e31;
            const MeridianSurface s = make(kappa);
            try {
                const HyperplaneResult hp =
                    hyperplane_check(s, make_axes(s, 40, 40, 0.02), target, 1e-8);
                worst_hp = std::max(worst_hp, hp.defect);
                ok = ok && hp.flag;
            } catch (const Error&) {
                ok = false;
            }
        }
    }
    const bool pass = ok && worst_trap <= 1e-10 && worst_hp <= 1e-8;
    return {7, "linear profiles: trapped at kappa^2 = b^2, else hyperplane by sign", pass,
            fmt("<H,H>=%.3e (<=1e-10), hyperplane=%.3e (<=1e-8)", worst_trap, worst_hp)};
}

// --- criterion 8: nonexistence in the constant-f*kappa_m subcase ------------

CriterionResult criterion8(int jobs, double noise_floor) {
    double min_defect = 1e300;
    for (int k = 0; k < 20; ++k) {
        const SurfaceKind kind = k < 10 ? SurfaceKind::elliptic : SurfaceKind::hyperbolic;
        const bool ell = kind == SurfaceKind::elliptic;
        Rng rng(8000 + static_cast<std::uint64_t>(k));
        double kappa = 0.0, a = 0.0;
        for (int tries = 0; tries < 100; ++tries) {
            kappa = rng.signed_uniform(0.5, ell ? 2.5 : 2.2);
            a = rng.uniform(ell ? 0.6 : 0.5, 1.8);
            const double excluded = ell ? 1.0 + kappa * kappa : kappa * kappa - 1.0;
            if (std::abs(a * a - excluded) >= 0.3) break;
        }
        auto prof = ell ? constant_fkm_profile(kind, a, rng.uniform(1.0, 1.8), 0.4, 1.0, 2e-4)
                        : constant_fkm_profile(kind, a, rng.uniform(1.5, 2.0), 0.8, 0.8, 2e-4);
        const MeridianSurface s(prof, make_base(kind, kappa, 1.0, 1e-4));
        const GridAxes grid = make_axes(s, 25, 25, 0.03);
        const auto lambda = [kind, kappa, a](const SurfacePoint& p) {
            return lambda_subcase3(kind, kappa, a, p.prof.f);
        };
        const SecondKindExtract ext = second_kind_extract(s, grid, lambda, 1e-5, jobs);
        min_defect = std::min(min_defect, ext.constancy_defect);
    }
    const double floor = std::max(1e-2, 100.0 * noise_floor);
    const bool pass = min_defect >= floor;
    return {8, "nonexistence witnesses: constant f*kappa_m leaves C non-constant", pass,
            fmt("min_defect=%.3e (>= max(1e-2, 100x noise %.3e))", min_defect, noise_floor)};
}

// --- criterion 9: frame derivative formulas ----------------------------------

CriterionResult criterion9(int) {
    const double h = 1e-4;
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
        const SurfaceKind kind = k < 3 ? SurfaceKind::elliptic : SurfaceKind::hyperbolic;
        const bool ell = kind == SurfaceKind::elliptic;
        Rng rng(9000 + static_cast<std::uint64_t>(k));
        const MeridianSurface s = random_surface(kind, rng, 1e-4);
        const GridAxes grid = make_axes(s, 8, 8, 0.05);

        grid_for_each_serial(grid, [&](std::size_t, std::size_t, double u, double v) {
            const SurfacePoint p = s.point(u, v);
            const double f = p.prof.f, df = p.prof.df, dg = p.prof.dg;
            const double km = p.prof.kappa_m, kap = p.kappa;
            const FrameAtPoint& fr = p.frame;

            const FrameAtPoint up = s.frame(u + h, v), um = s.frame(u - h, v);
            const FrameAtPoint vp = s.frame(u, v + h), vm = s.frame(u, v - h);
            const double iu = 0.5 / h;
            const double iv = 0.5 / (h * f); // unit field y = (1/f) d/dv
            auto du = [&](SpacetimeVector FrameAtPoint::*m) { return (up.*m - um.*m) * iu; };
            auto dv = [&](SpacetimeVector FrameAtPoint::*m) { return (vp.*m - vm.*m) * iv; };

            SpacetimeVector zero{};
            const SpacetimeVector pred_du_x = ell ? km * fr.n2 : (-km) * fr.n1;
            const SpacetimeVector pred_dv_y =
                ell ? (-df / f) * fr.x + (kap / f) * fr.n1 + (dg / f) * fr.n2
                    : (-df / f) * fr.x + (-dg / f) * fr.n1 + (-kap / f) * fr.n2;
            const SpacetimeVector pred_du_n1 = ell ? zero : km * fr.x;
            const SpacetimeVector pred_dv_n1 = ell ? (-kap / f) * fr.y : (dg / f) * fr.y;
            const SpacetimeVector pred_du_n2 = ell ? km * fr.x : zero;
            const SpacetimeVector pred_dv_n2 = ell ? (dg / f) * fr.y : (-kap / f) * fr.y;

            const SpacetimeVector residuals[8] = {
                du(&FrameAtPoint::x) - pred_du_x,
                du(&FrameAtPoint::y) - zero,
                dv(&FrameAtPoint::x) - (df / f) * fr.y,
                dv(&FrameAtPoint::y) - pred_dv_y,
                du(&FrameAtPoint::n1) - pred_du_n1,
                dv(&FrameAtPoint::n1) - pred_dv_n1,
                du(&FrameAtPoint::n2) - pred_du_n2,
                dv(&FrameAtPoint::n2) - pred_dv_n2,
            };
            for (const auto& r : residuals) worst = std::max(worst, r.max_abs());
        });
    }
    const bool pass = worst <= 1e-6;
    return {9, "all sixteen frame derivative formulas hold under finite differences", pass,
            fmt("max_residual=%.3e (<=1e-6)", worst)};
}

} // namespace

std::vector<CriterionResult> run_suite(const std::string& suite, int jobs) {
    std::vector<int> ids;
    if (suite == "all") ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    else if (suite == "oracle") ids = {1, 9};
    else if (suite == "harmonic") ids = {2, 3};
    else if (suite == "first") ids = {4, 5};
    else if (suite == "second") ids = {6, 7, 8};
    else throw DomainError("unknown suite \"" + suite + "\"");

    std::vector<CriterionResult> out;
    double noise_floor = 0.0;
    bool have_floor = false;
    for (int id : ids) {
        switch (id) {
            case 1: out.push_back(criterion1(jobs)); break;
            case 2: out.push_back(criterion2(jobs)); break;
            case 3: out.push_back(criterion3(jobs)); break;
            case 4: out.push_back(criterion4(jobs)); break;
            case 5: out.push_back(criterion5(jobs)); break;
            case 6: {
                Criterion6Outcome c6 = criterion6(jobs);
                noise_floor = c6.noise_floor;
                have_floor = true;
                out.push_back(c6.result);
                break;
            }
            case 7: out.push_back(criterion7(jobs)); break;
            case 8: {
                if (!have_floor) {
                    noise_floor = criterion6(jobs).noise_floor;
                    have_floor = true;
                }
                out.push_back(criterion8(jobs, noise_floor));
                break;
            }
            case 9: out.push_back(criterion9(jobs)); break;
        }
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace meridian
