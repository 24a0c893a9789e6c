#pragma once
#include <memory>
#include <optional>

#include "meridian/isometry.hpp"
#include "meridian/minkowski.hpp"
#include "meridian/profile.hpp"
#include "meridian/spherical.hpp"

namespace meridian {

// Adapted orthonormal frame {x, y, n1, n2} with signs (+,+,+,-):
// x, y span the tangent plane, n1 is the spacelike normal, n2 the timelike one.
struct FrameAtPoint {
    SpacetimeVector x, y, n1, n2;
    double u = 0.0, v = 0.0;

    // Max-abs deviation of the frame Gram matrix from diag(1,1,1,-1).
    double orthonormality_defect() const;
};

// Everything the per-point formulas need, computed once.
struct SurfacePoint {
    double u = 0.0, v = 0.0;
    ProfileSample prof;
    double kappa = 0.0, dkappa = 0.0;
    FrameAtPoint frame;
};

// Meridian surface z(u,v) = f(u) l(v) + g(u) * axis, with the base curve and
// axis embedding fixed by the kind: elliptic surfaces rotate about e4 with
// l(v) in span{e1,e2,e3}; hyperbolic ones rotate about e1 with l(v) in
// span{e2,e3,e4}. Immutable after construction; evaluations are pure.
class MeridianSurface {
public:
    MeridianSurface(std::shared_ptr<const ProfileCurve> profile, SphericalCurve base);

    SurfaceKind kind() const { return kind_; }
    const ProfileCurve& profile() const { return *profile_; }
    const SphericalCurve& base() const { return base_; }

    double u_lo() const { return profile_->u_lo(); }
    double u_hi() const { return profile_->u_hi(); }
    double v_lo() const { return base_.v_lo(); }
    double v_hi() const { return base_.v_hi(); }

    // Same surface moved by a rigid motion of R^4_1.
    MeridianSurface with_isometry(const Isometry& q) const;

    SpacetimeVector immersion(double u, double v) const;
    SurfacePoint point(double u, double v) const;
    FrameAtPoint frame(double u, double v) const;

    // First fundamental form coefficients (E, F, metric_coefficient = f^2).
    struct FirstForm {
        double e, f, metric_coefficient;
    };
    FirstForm first_form(double u, double v) const;

private:
    SurfaceKind kind_;
    std::shared_ptr<const ProfileCurve> profile_;
    SphericalCurve base_;
    std::optional<Isometry> motion_;
};

SpacetimeVector mean_curvature_vector(const SurfacePoint& p, SurfaceKind kind);
Bivector gauss_map(const SurfacePoint& p);
Bivector laplacian_closed(const SurfacePoint& p, SurfaceKind kind);

// Convenience overloads evaluating the point first.
SpacetimeVector mean_curvature_vector(const MeridianSurface& s, double u, double v);
Bivector gauss_map(const MeridianSurface& s, double u, double v);
Bivector laplacian_closed(const MeridianSurface& s, double u, double v);

} // namespace meridian
