#include "meridian/spherical.hpp"

#include <cmath>
#include <cstdio>

#include "meridian/errors.hpp"
#include "meridian/interp.hpp"

namespace meridian {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kInitialGramTol = 1e-12;

// Frenet right-hand side: l' = t; t' = +-kappa n - l; n' = -kappa t,
// with the minus sign on the t' term for hyperbolic curves.
FrenetFrame3 frenet_rhs(SurfaceKind kind, const FrenetFrame3& y, double kappa) {
    const double sgn = (kind == SurfaceKind::elliptic) ? 1.0 : -1.0;
    FrenetFrame3 d;
    d.l = y.t;
    d.t = sgn * kappa * y.n - y.l;
    d.n = (-kappa) * y.t;
    return d;
}

FrenetFrame3 axpy(const FrenetFrame3& y, double h, const FrenetFrame3& d) {
    return {y.l + h * d.l, y.t + h * d.t, y.n + h * d.n};
}

double frame_gram_defect(SurfaceKind kind, const FrenetFrame3& fr) {
    const Vec3* v[3] = {&fr.l, &fr.t, &fr.n};
    const double target[3] = {1.0, 1.0, kind == SurfaceKind::elliptic ? 1.0 : -1.0};
    double defect = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double want = (i == j) ? target[i] : 0.0;
            defect = std::max(defect, std::abs(dot3(kind, *v[i], *v[j]) - want));
        }
    return defect;
}

} // namespace

KappaFunction KappaFunction::callable(std::function<double(double)> f) {
    KappaFunction k;
    k.fn_ = std::move(f);
    return k;
}

double KappaFunction::value(double v) const { return is_poly_ ? poly_.eval(v) : fn_(v); }

double KappaFunction::derivative(double v) const {
    if (is_poly_) return dpoly_.eval(v);
    const double h = 1e-5;
    return (fn_(v + h) - fn_(v - h)) / (2.0 * h);
}

bool SphericalCurve::contains(double v) const {
    return v >= v_lo_ - kDomainSlack && v <= v_hi_ + kDomainSlack;
}

void SphericalCurve::require_in_domain(double v) const {
    if (!contains(v)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "v = %.9g outside curve domain [%.9g, %.9g]", v, v_lo_,
                      v_hi_);
        throw DomainError(msg);
    }
}

FrenetFrame3 SphericalCurve::frame_at(double v) const {
    require_in_domain(v);
    const Interp4 w(v_lo_, step_, samples_.size(), v);
    FrenetFrame3 out;
    for (int k = 0; k < 4; ++k) {
        const FrenetFrame3& s = samples_[w.i0 + k];
        out.l = out.l + w.l[k] * s.l;
        out.t = out.t + w.l[k] * s.t;
        out.n = out.n + w.l[k] * s.n;
    }
    return out;
}

double SphericalCurve::gram_defect() const { return meridian::gram_defect(kind_, samples_); }

double gram_defect(SurfaceKind kind, const std::vector<FrenetFrame3>& samples) {
    double defect = 0.0;
    for (const auto& fr : samples) defect = std::max(defect, frame_gram_defect(kind, fr));
    return defect;
}

SphericalCurve integrate_spherical(const SphericalCurveSpec& spec) {
    if (!(spec.step > 0.0)) throw DomainError("spherical curve step must be positive");
    if (!(spec.v_hi > spec.v_lo)) throw DomainError("spherical curve domain is empty");

    const double init_defect = frame_gram_defect(spec.kind, spec.initial);
    if (init_defect > kInitialGramTol) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "initial frame Gram defect %.3e exceeds %.0e",
                      init_defect, kInitialGramTol);
        throw FrameError(msg);
    }

    const double span = spec.v_hi - spec.v_lo;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / spec.step - 1e-9));
    const double h = span / static_cast<double>(n_steps);

    SphericalCurve curve;
    curve.kind_ = spec.kind;
    curve.kappa_ = spec.kappa;
    curve.v_lo_ = spec.v_lo;
    curve.v_hi_ = spec.v_hi;
    curve.step_ = h;
    curve.samples_.reserve(n_steps + 1);
    curve.samples_.push_back(spec.initial);

    FrenetFrame3 y = spec.initial;
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double v = spec.v_lo + h * static_cast<double>(i);
        const double k1v = spec.kappa.value(v);
        const double k2v = spec.kappa.value(v + 0.5 * h);
        const double k4v = spec.kappa.value(v + h);

        const FrenetFrame3 k1 = frenet_rhs(spec.kind, y, k1v);
        const FrenetFrame3 k2 = frenet_rhs(spec.kind, axpy(y, 0.5 * h, k1), k2v);
        const FrenetFrame3 k3 = frenet_rhs(spec.kind, axpy(y, 0.5 * h, k2), k2v);
        const FrenetFrame3 k4 = frenet_rhs(spec.kind, axpy(y, h, k3), k4v);

        y.l = y.l + (h / 6.0) * (k1.l + 2.0 * k2.l + 2.0 * k3.l + k4.l);
        y.t = y.t + (h / 6.0) * (k1.t + 2.0 * k2.t + 2.0 * k3.t + k4.t);
        y.n = y.n + (h / 6.0) * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
        curve.samples_.push_back(y);
    }
    return curve;
}

} // namespace meridian
