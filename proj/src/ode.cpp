#include "meridian/ode.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void stop(const char* what, const char* detail, double u, double u_lo) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "%s at u = %.9g (achieved span [%.9g, %.9g])", detail, u,
                  u_lo, u);
    if (what[0] == 'B') throw BlowUp(msg);
    if (what[0] == 'C') throw ConstraintError(msg);
    throw SingularDenominator(msg);
}

struct State4 {
    double f, g, a, b; // a = phi or s, b = p or w
};

State4 axpy(const State4& y, double h, const State4& d) {
    return {y.f + h * d.f, y.g + h * d.g, y.a + h * d.a, y.b + h * d.b};
}

// 4th-order central first derivative on a uniform grid.
double d5(const std::vector<double>& q, std::size_t i, double h) {
    return (-q[i + 2] + 8.0 * q[i + 1] - 8.0 * q[i - 1] + q[i - 2]) / (12.0 * h);
}

double first_kind_residual(const OdeSolution& sol, std::vector<double>* pointwise) {
    const bool ell = kind_of(sol.case_tag) == SurfaceKind::elliptic;
    const std::size_t n = sol.rows.size();
    if (n < 5) throw DomainError("residual needs at least 5 samples");

    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        const OdeRow& r = sol.rows[i];
        const double root = ell ? std::sqrt(r.df * r.df - 1.0) : std::sqrt(1.0 - r.df * r.df);
        // On the degenerate straight branch f'' and the root vanish together.
        q[i] = root > 0.0 ? r.f * r.d2f / root : 0.0;
    }
    if (pointwise) pointwise->assign(n, kNan);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const OdeRow& r = sol.rows[i];
        const double root = ell ? std::sqrt(r.df * r.df - 1.0) : std::sqrt(1.0 - r.df * r.df);
        const double res = ell ? r.f * d5(q, i, sol.step) - r.df * root
                               : r.f * d5(q, i, sol.step) + r.df * root;
        if (pointwise) (*pointwise)[i] = res;
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

struct SecondKindResiduals {
    double literal_max = 0.0;        // |d5(ln Phi) - rhs|
    double first_integral_max = 0.0; // |d5(ln c g') - rhs|, same stencil
    double phi_deviation = 0.0;      // |ln Phi - ln(c g')| pointwise
};

// Residual of the literal fourth-order equation (ln Phi)' = +-f'f''/(f'^2 -+ 1)
// with Phi the rational expression in (f, f', f'', (f f'')'). The derivative
// (f f'')' is itself recovered from the samples, so the check is independent
// of the closed-form w' used during integration.
SecondKindResiduals second_kind_residual(const OdeSolution& sol,
                                         std::vector<double>* pointwise) {
    const bool ell = kind_of(sol.case_tag) == SurfaceKind::elliptic;
    const std::size_t n = sol.rows.size();
    if (n < 9) throw DomainError("second-kind residual needs at least 9 samples");

    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = sol.rows[i].f * sol.rows[i].d2f;

    SecondKindResiduals out;
    const double log_c = std::log(std::abs(sol.params.c));
    std::vector<double> log_phi(n, kNan), log_gprime(n, kNan);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const OdeRow& r = sol.rows[i];
        const double s = r.df;
        const double dw = d5(w, i, sol.step);
        const double reg = ell ? s * s - 1.0 : 1.0 - s * s;
        const double root = std::sqrt(reg);
        double num, den;
        if (ell) {
            num = root * (r.f * reg * dw - s * w[i] * w[i] - s * reg * reg);
            den = reg * reg + w[i] * w[i] - r.f * s * reg * dw;
        } else {
            num = root * (r.f * reg * dw + s * w[i] * w[i] + s * reg * reg);
            den = reg * reg + w[i] * w[i] + r.f * s * reg * dw;
        }
        log_phi[i] = std::log(std::abs(num / den));
        log_gprime[i] = std::log(root);
        out.phi_deviation =
            std::max(out.phi_deviation, std::abs(log_phi[i] - log_c - log_gprime[i]));
    }

    if (pointwise) pointwise->assign(n, kNan);
    for (std::size_t i = 4; i + 4 < n; ++i) {
        const OdeRow& r = sol.rows[i];
        const double reg = ell ? r.df * r.df - 1.0 : 1.0 - r.df * r.df;
        const double rhs = (ell ? 1.0 : -1.0) * r.df * r.d2f / reg;
        const double res = d5(log_phi, i, sol.step) - rhs;
        const double res_first = d5(log_gprime, i, sol.step) - rhs;
        if (pointwise) (*pointwise)[i] = res;
        out.literal_max = std::max(out.literal_max, std::abs(res));
        out.first_integral_max = std::max(out.first_integral_max, std::abs(res_first));
    }
    return out;
}

} // namespace

const char* to_string(OdeCase c) {
    switch (c) {
        case OdeCase::first_elliptic: return "first_elliptic";
        case OdeCase::first_hyperbolic: return "first_hyperbolic";
        case OdeCase::second_elliptic: return "second_elliptic";
        case OdeCase::second_hyperbolic: return "second_hyperbolic";
    }
    return "?";
}

SurfaceKind kind_of(OdeCase c) {
    return (c == OdeCase::first_elliptic || c == OdeCase::second_elliptic)
               ? SurfaceKind::elliptic
               : SurfaceKind::hyperbolic;
}

OdeSolution solve_first_kind(SurfaceKind kind, double f0, double phi0, double p0, double u_lo,
                             double u_hi, double step, const OdeGuards& guards) {
    if (!(f0 > 0.0)) throw DomainError("first-kind solve requires f0 > 0");
    if (!(step > 0.0) || !(u_hi > u_lo)) throw DomainError("first-kind solve needs a span and step > 0");
    const bool ell = kind == SurfaceKind::elliptic;

    // Enforce the strict branch condition only when the initial data starts
    // strictly inside it; the degenerate stationary branch (phi0 = 0, p0 = 0)
    // is a legitimate trivial solution rejected downstream by its consumers.
    const double edge0 = ell ? std::abs(std::sinh(phi0)) : 1.0 - std::abs(std::cos(phi0));
    const bool enforce_branch = edge0 > guards.branch_eps;

    auto check = [&](const State4& y, double u) {
        if (!(y.f > guards.f_min)) stop("B", "f reached its lower guard", u, u_lo);
        if (!(std::abs(y.a) < guards.phi_max))
            stop("B", "slope angle reached its guard bound", u, u_lo);
        if (enforce_branch) {
            const double edge = ell ? std::abs(std::sinh(y.a)) : 1.0 - std::abs(std::cos(y.a));
            if (!(edge > guards.branch_eps))
                stop("C", "f' reached the branch boundary", u, u_lo);
        }
    };
    auto rhs = [&](const State4& y) {
        State4 d;
        if (ell) {
            d.f = std::cosh(y.a);
            d.g = std::sinh(y.a);
        } else {
            d.f = std::cos(y.a);
            d.g = std::sin(y.a);
        }
        d.a = y.b / y.f;
        d.b = d.f * d.g / y.f;
        return d;
    };
    auto to_row = [&](const State4& y, double u) {
        OdeRow r;
        r.u = u;
        r.f = y.f;
        r.g = y.g;
        if (ell) {
            r.df = std::cosh(y.a);
            r.dg = std::sinh(y.a);
            r.d2f = (y.b / y.f) * r.dg;
        } else {
            r.df = std::cos(y.a);
            r.dg = std::sin(y.a);
            r.d2f = -(y.b / y.f) * r.dg;
        }
        r.d2g = (y.b / y.f) * r.df;
        r.kappa_m = y.b / y.f;
        r.dkappa_m = (r.df * r.dg - y.b * r.df) / (y.f * y.f);
        return r;
    };

    const double span = u_hi - u_lo;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
    const double h = span / static_cast<double>(n_steps);

    OdeSolution sol;
    sol.case_tag = ell ? OdeCase::first_elliptic : OdeCase::first_hyperbolic;
    sol.params.f0 = f0;
    sol.params.phi0 = phi0;
    sol.params.p0 = p0;
    sol.u_lo = u_lo;
    sol.step = h;
    sol.rows.reserve(n_steps + 1);

    State4 y{f0, 0.0, phi0, p0};
    check(y, u_lo);
    sol.rows.push_back(to_row(y, u_lo));
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double u = u_lo + h * static_cast<double>(i);
        const State4 k1 = rhs(y);
        const State4 k2 = rhs(axpy(y, 0.5 * h, k1));
        const State4 k3 = rhs(axpy(y, 0.5 * h, k2));
        const State4 k4 = rhs(axpy(y, h, k3));
        State4 trial = y;
        trial.f += (h / 6.0) * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
        trial.g += (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
        trial.a += (h / 6.0) * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
        trial.b += (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
        check(trial, u + h); // halt before committing a violating state
        y = trial;
        sol.rows.push_back(to_row(y, u + h));
    }

    sol.residual_max = first_kind_residual(sol, &sol.residuals);
    return sol;
}

OdeSolution solve_second_kind(SurfaceKind kind, double f0, double df0, double d2f0, double c,
                              double u_lo, double u_hi, double step, const OdeGuards& guards) {
    if (c == 0.0) throw DomainError("c must be nonzero");
    if (!(f0 > 0.0)) throw DomainError("second-kind solve requires f0 > 0");
    if (!(step > 0.0) || !(u_hi > u_lo))
        throw DomainError("second-kind solve needs a span and step > 0");
    const bool ell = kind == SurfaceKind::elliptic;
    if (ell && !(df0 > 1.0 + guards.branch_eps))
        throw ConstraintError("elliptic second-kind solve requires f'(0) > 1");
    if (!ell && !(std::abs(df0) < 1.0 - guards.branch_eps && std::abs(df0) > guards.branch_eps))
        throw ConstraintError("hyperbolic second-kind solve requires 0 < f'(0)^2 < 1");

    auto check = [&](const State4& y, double u) {
        if (!(y.f > guards.f_min)) stop("B", "f reached its lower guard", u, u_lo);
        if (!(std::abs(y.b) < guards.w_max)) stop("B", "f f'' reached its guard bound", u, u_lo);
        if (ell) {
            if (!(y.a - 1.0 > guards.branch_eps))
                stop("C", "f' reached the branch boundary f' = 1", u, u_lo);
            if (!(std::abs(1.0 + c * y.a) > guards.denom_eps))
                stop("S", "1 + c f' degenerated", u, u_lo);
        } else {
            if (!(1.0 - std::abs(y.a) > guards.branch_eps))
                stop("C", "f' reached the branch boundary |f'| = 1", u, u_lo);
            if (!(std::abs(y.a) > guards.branch_eps))
                stop("C", "f' reached the branch boundary f' = 0", u, u_lo);
            if (!(std::abs(1.0 - c * y.a) > guards.denom_eps))
                stop("S", "1 - c f' degenerated", u, u_lo);
        }
    };
    auto dw_of = [&](const State4& y) {
        if (ell) {
            const double reg = y.a * y.a - 1.0;
            return (y.a + c) * (y.b * y.b + reg * reg) / (y.f * reg * (1.0 + c * y.a));
        }
        const double reg = 1.0 - y.a * y.a;
        return (c - y.a) * (y.b * y.b + reg * reg) / (y.f * reg * (1.0 - c * y.a));
    };
    auto rhs = [&](const State4& y) {
        const double reg = ell ? y.a * y.a - 1.0 : 1.0 - y.a * y.a;
        State4 d;
        d.f = y.a;
        d.g = std::sqrt(reg);
        d.a = y.b / y.f;
        d.b = dw_of(y);
        return d;
    };
    auto to_row = [&](const State4& y, double u) {
        const double reg = ell ? y.a * y.a - 1.0 : 1.0 - y.a * y.a;
        const double root = std::sqrt(reg);
        const double dw = dw_of(y);
        OdeRow r;
        r.u = u;
        r.f = y.f;
        r.g = y.g;
        r.df = y.a;
        r.dg = root;
        r.d2f = y.b / y.f;
        if (ell) {
            r.d2g = y.a * r.d2f / root;
            r.kappa_m = r.d2f / root;
            r.dkappa_m =
                ((dw * y.f - y.b * y.a) * reg - y.a * y.b * y.b) / (y.f * y.f * reg * root);
        } else {
            r.d2g = -y.a * r.d2f / root;
            r.kappa_m = -r.d2f / root;
            r.dkappa_m =
                -((dw * y.f - y.b * y.a) * reg + y.a * y.b * y.b) / (y.f * y.f * reg * root);
        }
        return r;
    };

    const double span = u_hi - u_lo;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
    const double h = span / static_cast<double>(n_steps);

    OdeSolution sol;
    sol.case_tag = ell ? OdeCase::second_elliptic : OdeCase::second_hyperbolic;
    sol.params.f0 = f0;
    sol.params.df0 = df0;
    sol.params.d2f0 = d2f0;
    sol.params.c = c;
    sol.u_lo = u_lo;
    sol.step = h;
    sol.rows.reserve(n_steps + 1);

    State4 y{f0, 0.0, df0, f0 * d2f0};
    check(y, u_lo);
    sol.rows.push_back(to_row(y, u_lo));
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double u = u_lo + h * static_cast<double>(i);
        const State4 k1 = rhs(y);
        const State4 k2 = rhs(axpy(y, 0.5 * h, k1));
        const State4 k3 = rhs(axpy(y, 0.5 * h, k2));
        const State4 k4 = rhs(axpy(y, h, k3));
        State4 trial = y;
        trial.f += (h / 6.0) * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
        trial.g += (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
        trial.a += (h / 6.0) * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
        trial.b += (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
        check(trial, u + h);
        y = trial;
        sol.rows.push_back(to_row(y, u + h));
    }

    const SecondKindResiduals res = second_kind_residual(sol, &sol.residuals);
    sol.residual_max = res.literal_max;
    // A defect in the w' reduction leaves Phi != c g' outright.
    if (res.phi_deviation > 1e-6) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "first integral violated: |ln Phi - ln c g'| = %.3e",
                      res.phi_deviation);
        throw ReductionMismatch(msg);
    }
    // The stencil amplifies the pointwise noise of ln Phi by ~1.5/h; compare
    // the literal residual against that floor and the first-integral form.
    const double stencil_floor = 1.5 * std::max(res.phi_deviation, 1e-13) / h;
    if (res.literal_max > 10.0 * std::max(res.first_integral_max, stencil_floor)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "literal-ODE residual %.3e exceeds 10x the first-integral residual %.3e",
                      res.literal_max, std::max(res.first_integral_max, stencil_floor));
        throw ReductionMismatch(msg);
    }
    return sol;
}

double ode_residual(const OdeSolution& sol) {
    if (sol.case_tag == OdeCase::first_elliptic || sol.case_tag == OdeCase::first_hyperbolic)
        return first_kind_residual(sol, nullptr);
    return second_kind_residual(sol, nullptr).literal_max;
}

std::shared_ptr<const ProfileCurve> profile_from_solution(const OdeSolution& sol) {
    std::vector<ProfileSample> samples;
    samples.reserve(sol.rows.size());
    for (const OdeRow& r : sol.rows) {
        ProfileSample s;
        s.f = r.f;
        s.g = r.g;
        s.df = r.df;
        s.dg = r.dg;
        s.d2f = r.d2f;
        s.d2g = r.d2g;
        s.kappa_m = r.kappa_m;
        s.dkappa_m = r.dkappa_m;
        samples.push_back(s);
    }
    return make_sampled_profile(kind_of(sol.case_tag), sol.u_lo, sol.step, std::move(samples));
}

} // namespace meridian
