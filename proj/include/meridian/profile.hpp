#pragma once
#include <memory>
#include <vector>

#include "meridian/kinds.hpp"
#include "meridian/poly.hpp"

namespace meridian {

// All profile data needed by surface/Laplacian formulas at one parameter value.
struct ProfileSample {
    double f = 0.0, g = 0.0;
    double df = 0.0, dg = 0.0;   // f', g'
    double d2f = 0.0, d2g = 0.0; // f'', g''
    double kappa_m = 0.0;        // meridian curvature f'g'' - g'f''
    double dkappa_m = 0.0;       // d/du of kappa_m

    // d/du of (f * kappa_m), used by the Laplacian coefficients.
    double d_f_kappa_m() const { return df * kappa_m + f * dkappa_m; }
};

// Meridian (profile) curve m(u) = (f(u), g(u)) in slope-angle form:
// elliptic  f' = cosh(phi), g' = sinh(phi)  =>  f'^2 - g'^2 = 1,
// hyperbolic f' = cos(phi),  g' = sin(phi)  =>  f'^2 + g'^2 = 1,
// with kappa_m = phi'. f must stay positive on the whole domain.
class ProfileCurve {
public:
    virtual ~ProfileCurve() = default;

    SurfaceKind kind() const { return kind_; }
    double u_lo() const { return u_lo_; }
    double u_hi() const { return u_hi_; }
    bool contains(double u) const;
    void require_in_domain(double u) const; // throws DomainError

    virtual ProfileSample at(double u) const = 0;

protected:
    ProfileCurve(SurfaceKind kind, double u_lo, double u_hi);

    SurfaceKind kind_;
    double u_lo_, u_hi_;
};

// phi given as a polynomial in u; f and g integrated from the anchored
// quadrature f(u) = f0 + int_{u_lo}^{u} f'(t) dt (and likewise g).
// Throws DomainError if f <= 0 anywhere on the sampled domain.
std::shared_ptr<const ProfileCurve> make_profile(SurfaceKind kind, Poly1 phi, double f0,
                                                 double g0, double u_lo, double u_hi);

// f = a u + a1, g = b u + b1 with the unit-speed constraint on (a, b)
// checked exactly; covers the constant-f family via a = 0 (hyperbolic only).
std::shared_ptr<const ProfileCurve> make_linear_profile(SurfaceKind kind, double a, double a1,
                                                        double b, double b1, double u_lo,
                                                        double u_hi);

// f constant, g = g_slope * u + b with g_slope = +-1 (hyperbolic only).
std::shared_ptr<const ProfileCurve> make_constant_f_profile(double a, int g_slope, double b,
                                                            double u_lo, double u_hi);

// Profile backed by uniformly spaced samples (from an ODE solve); queries use
// 4-point polynomial interpolation on the stored grid.
std::shared_ptr<const ProfileCurve> make_sampled_profile(SurfaceKind kind, double u_lo,
                                                         double step,
                                                         std::vector<ProfileSample> samples);

// kappa_m at u; equals phi'(u) = f'g'' - g'f'' in slope-angle form.
double profile_curvature(const ProfileCurve& p, double u);

} // namespace meridian
