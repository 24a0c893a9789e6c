#pragma once
#include <functional>
#include <vector>

#include "meridian/kinds.hpp"
#include "meridian/poly.hpp"

namespace meridian {

// 3-vector in the ambient space of the base curve. Elliptic curves live in
// span{e1,e2,e3} with the Euclidean metric; hyperbolic curves live in
// span{e2,e3,e4}, coordinates ordered (e2,e3,e4), metric (+,+,-).
struct Vec3 {
    double a = 0.0, b = 0.0, c = 0.0;

    Vec3 operator+(const Vec3& o) const { return {a + o.a, b + o.b, c + o.c}; }
    Vec3 operator-(const Vec3& o) const { return {a - o.a, b - o.b, c - o.c}; }
    Vec3 operator*(double s) const { return {a * s, b * s, c * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot3(SurfaceKind kind, const Vec3& u, const Vec3& w) {
    const double last = (kind == SurfaceKind::elliptic) ? u.c * w.c : -u.c * w.c;
    return u.a * w.a + u.b * w.b + last;
}

// Spherical curvature, either closed form (polynomial; derivative analytic)
// or an arbitrary callable (derivative by central differences).
class KappaFunction {
public:
    static KappaFunction constant(double k) { return KappaFunction(Poly1::constant(k)); }
    static KappaFunction poly(Poly1 p) { return KappaFunction(std::move(p)); }
    static KappaFunction callable(std::function<double(double)> f);

    double value(double v) const;
    double derivative(double v) const;
    bool is_poly() const { return is_poly_; }
    const Poly1& as_poly() const { return poly_; }

private:
    explicit KappaFunction(Poly1 p) : is_poly_(true), poly_(std::move(p)), dpoly_(poly_.derivative()) {}
    KappaFunction() = default;

    bool is_poly_ = false;
    Poly1 poly_, dpoly_;
    std::function<double(double)> fn_;
};

struct FrenetFrame3 {
    Vec3 l, t, n;
};

struct SphericalCurveSpec {
    SurfaceKind kind = SurfaceKind::elliptic;
    KappaFunction kappa = KappaFunction::constant(0.0);
    FrenetFrame3 initial; // frame at v_lo; Gram constraints checked to 1e-12
    double v_lo = 0.0;
    double v_hi = 1.0;
    double step = 1e-3;
};

// Arc-length parameterized curve on S^2(1) (elliptic) or S^2_1(1)
// (hyperbolic) with its Frenet frame sampled on a uniform grid.
class SphericalCurve {
public:
    SurfaceKind kind() const { return kind_; }
    double v_lo() const { return v_lo_; }
    double v_hi() const { return v_hi_; }
    double step() const { return step_; }
    const std::vector<FrenetFrame3>& samples() const { return samples_; }

    bool contains(double v) const;
    void require_in_domain(double v) const;

    // 4-point polynomial interpolation between stored samples.
    FrenetFrame3 frame_at(double v) const;

    double kappa(double v) const { return kappa_.value(v); }
    double dkappa(double v) const { return kappa_.derivative(v); }

    // Max over samples of the max-abs deviation of the (l,t,n) Gram matrix
    // from its target (identity, resp. diag(1,1,-1)).
    double gram_defect() const;

    friend SphericalCurve integrate_spherical(const SphericalCurveSpec& spec);

private:
    SurfaceKind kind_ = SurfaceKind::elliptic;
    KappaFunction kappa_ = KappaFunction::constant(0.0);
    double v_lo_ = 0.0, v_hi_ = 1.0, step_ = 1e-3;
    std::vector<FrenetFrame3> samples_;
};

// Classical fixed-step RK4 on the Frenet system. Throws FrameError if the
// initial frame violates its Gram constraints beyond 1e-12.
SphericalCurve integrate_spherical(const SphericalCurveSpec& spec);

// Gram defect of an arbitrary sample set against the kind's target.
double gram_defect(SurfaceKind kind, const std::vector<FrenetFrame3>& samples);

} // namespace meridian
