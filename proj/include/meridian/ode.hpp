#pragma once
#include <memory>
#include <string>
#include <vector>

#include "meridian/kinds.hpp"
#include "meridian/profile.hpp"

namespace meridian {

enum class OdeCase { first_elliptic, first_hyperbolic, second_elliptic, second_hyperbolic };

const char* to_string(OdeCase c);
SurfaceKind kind_of(OdeCase c);

// One integration sample with everything downstream consumers need.
struct OdeRow {
    double u = 0.0;
    double f = 0.0, g = 0.0;
    double df = 0.0, dg = 0.0;
    double d2f = 0.0, d2g = 0.0;
    double kappa_m = 0.0, dkappa_m = 0.0;
};

struct OdeParams {
    double f0 = 1.0;
    double phi0 = 0.0; // first kind: initial slope angle
    double p0 = 0.0;   // first kind: initial f * kappa_m
    double df0 = 0.0;  // second kind: initial f'
    double d2f0 = 0.0; // second kind: initial f''
    double c = 0.0;    // second kind: first-integral constant
};

struct OdeSolution {
    OdeCase case_tag = OdeCase::first_elliptic;
    OdeParams params;
    double u_lo = 0.0, step = 0.0;
    std::vector<OdeRow> rows;
    // Pointwise residual of the case's literal ODE, finite-differenced with
    // 4th-order stencils on the samples; NaN where the stencil does not fit.
    std::vector<double> residuals;
    double residual_max = 0.0;

    double u_hi() const { return u_lo + step * (static_cast<double>(rows.size()) - 1.0); }
};

// Event-guard thresholds; the integrator halts with a typed error before any
// of these is crossed, it never clamps.
struct OdeGuards {
    double f_min = 1e-6;       // BlowUp when f falls to this
    double phi_max = 20.0;     // BlowUp when |phi| grows past this (first kind)
    double w_max = 1e8;        // BlowUp when |f f''| grows past this (second kind)
    double branch_eps = 1e-9;  // ConstraintError margin on the f' branch conditions
    double denom_eps = 1e-9;   // SingularDenominator margin on 1 +- c f'
};

// First kind: integrate the system f' = cosh(phi) [cos(phi)], phi' = p / f,
// p' = cosh(phi) sinh(phi) / f [cos(phi) sin(phi) / f] with p = f * kappa_m,
// which is the slope-angle form of the condition f (f kappa_m)' = f' g'.
OdeSolution solve_first_kind(SurfaceKind kind, double f0, double phi0, double p0, double u_lo,
                             double u_hi, double step, const OdeGuards& guards = {});

// Second kind: integrate the first integral Phi = c g' as a system in
// (f, f' = s, w = f f''); the highest derivative solves the linear relation
//   elliptic:   w' = (s + c)(w^2 + A^2) / (f A (1 + c s)),  A = s^2 - 1,
//   hyperbolic: w' = (c - s)(w^2 + B^2) / (f B (1 - c s)),  B = 1 - s^2.
// See docs/second_kind_reduction.md. The literal fourth-order ODE is
// re-checked on the samples every run; a disagreement beyond 10x the
// first-integral noise floor raises ReductionMismatch.
OdeSolution solve_second_kind(SurfaceKind kind, double f0, double df0, double d2f0, double c,
                              double u_lo, double u_hi, double step,
                              const OdeGuards& guards = {});

// Max-abs finite-difference residual of the case's literal ODE over the
// interior samples (4th-order central stencils; needs >= 5 samples, the
// second-kind cases need >= 9).
double ode_residual(const OdeSolution& sol);

// Profile curve backed by the solution samples.
std::shared_ptr<const ProfileCurve> profile_from_solution(const OdeSolution& sol);

} // namespace meridian
