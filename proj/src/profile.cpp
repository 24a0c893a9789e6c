#include "meridian/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "meridian/errors.hpp"
#include "meridian/interp.hpp"

namespace meridian {

namespace {

constexpr double kDomainSlack = 1e-12;

// 20-point Gauss-Legendre rule on [-1, 1].
struct GlNode {
    double x, w;
};
constexpr GlNode kGl20[20] = {
    {-9.93128599185094885e-01, 1.76140071391532732e-02},
    {-9.63971927277913809e-01, 4.06014298003862170e-02},
    {-9.12234428251325835e-01, 6.26720483341094425e-02},
    {-8.39116971822218782e-01, 8.32767415767046715e-02},
    {-7.46331906460150796e-01, 1.01930119817240261e-01},
    {-6.36053680726515025e-01, 1.18194531961518245e-01},
    {-5.10867001950827126e-01, 1.31688638449176526e-01},
    {-3.73706088715419549e-01, 1.42096109318381875e-01},
    {-2.27785851141645096e-01, 1.49172986472603658e-01},
    {-7.65265211334973383e-02, 1.52753387130725782e-01},
    {7.65265211334973383e-02, 1.52753387130725782e-01},
    {2.27785851141645096e-01, 1.49172986472603658e-01},
    {3.73706088715419549e-01, 1.42096109318381875e-01},
    {5.10867001950827126e-01, 1.31688638449176526e-01},
    {6.36053680726515025e-01, 1.18194531961518245e-01},
    {7.46331906460150796e-01, 1.01930119817240261e-01},
    {8.39116971822218782e-01, 8.32767415767046715e-02},
    {9.12234428251325835e-01, 6.26720483341094425e-02},
    {9.63971927277913809e-01, 4.06014298003862170e-02},
    {9.93128599185094885e-01, 1.76140071391532732e-02},
};

template <class F>
double gl_integrate(const F& fn, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& n : kGl20) acc += n.w * fn(mid + half * n.x);
    return acc * half;
}

void check_f_positive(const ProfileCurve& p) {
    const int n = 2048;
    for (int i = 0; i <= n; ++i) {
        const double u = p.u_lo() + (p.u_hi() - p.u_lo()) * i / n;
        const double f = p.at(u).f;
        if (!(f > 0.0)) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "profile has f(u) = %.6g <= 0 at u = %.6g", f, u);
            throw DomainError(msg);
        }
    }
}

class SlopeAngleProfile final : public ProfileCurve {
public:
    SlopeAngleProfile(SurfaceKind kind, Poly1 phi, double f0, double g0, double u_lo,
                      double u_hi)
        : ProfileCurve(kind, u_lo, u_hi),
          phi_(std::move(phi)),
          dphi_(phi_.derivative()),
          d2phi_(dphi_.derivative()),
          f0_(f0),
          g0_(g0) {
        // Cumulative values of (f, g) on an anchor grid; queries integrate
        // only the short tail from the nearest anchor below.
        const double span = u_hi_ - u_lo_;
        n_panels_ = std::max(1, static_cast<int>(std::ceil(span / 0.1)));
        panel_ = span / n_panels_;
        anchors_f_.resize(n_panels_ + 1);
        anchors_g_.resize(n_panels_ + 1);
        anchors_f_[0] = f0_;
        anchors_g_[0] = g0_;
        for (int k = 0; k < n_panels_; ++k) {
            const double a = u_lo_ + k * panel_, b = a + panel_;
            anchors_f_[k + 1] = anchors_f_[k] + gl_integrate([this](double t) { return df_at(t); }, a, b);
            anchors_g_[k + 1] = anchors_g_[k] + gl_integrate([this](double t) { return dg_at(t); }, a, b);
        }
    }

    ProfileSample at(double u) const override {
        require_in_domain(u);
        ProfileSample s;
        const double phi = phi_.eval(u);
        const double dphi = dphi_.eval(u);
        if (kind_ == SurfaceKind::elliptic) {
            s.df = std::cosh(phi);
            s.dg = std::sinh(phi);
        } else {
            s.df = std::cos(phi);
            s.dg = std::sin(phi);
        }
        s.d2f = (kind_ == SurfaceKind::elliptic ? dphi * s.dg : -dphi * s.dg);
        s.d2g = dphi * s.df;
        s.kappa_m = dphi;
        s.dkappa_m = d2phi_.eval(u);

        if (phi_.is_constant()) {
            s.f = f0_ + (u - u_lo_) * s.df;
            s.g = g0_ + (u - u_lo_) * s.dg;
        } else {
            const int k = std::clamp(static_cast<int>((u - u_lo_) / panel_), 0, n_panels_ - 1);
            const double a = u_lo_ + k * panel_;
            s.f = anchors_f_[k] + gl_integrate([this](double t) { return df_at(t); }, a, u);
            s.g = anchors_g_[k] + gl_integrate([this](double t) { return dg_at(t); }, a, u);
        }
        return s;
    }

private:
    double df_at(double t) const {
        const double phi = phi_.eval(t);
        return kind_ == SurfaceKind::elliptic ? std::cosh(phi) : std::cos(phi);
    }
    double dg_at(double t) const {
        const double phi = phi_.eval(t);
        return kind_ == SurfaceKind::elliptic ? std::sinh(phi) : std::sin(phi);
    }

    Poly1 phi_, dphi_, d2phi_;
    double f0_, g0_;
    int n_panels_ = 1;
    double panel_ = 0.0;
    std::vector<double> anchors_f_, anchors_g_;
};

class LinearProfile final : public ProfileCurve {
public:
    LinearProfile(SurfaceKind kind, double a, double a1, double b, double b1, double u_lo,
                  double u_hi)
        : ProfileCurve(kind, u_lo, u_hi), a_(a), a1_(a1), b_(b), b1_(b1) {
        const double c = (kind == SurfaceKind::elliptic) ? a * a - b * b : a * a + b * b;
        if (std::abs(c - 1.0) > 1e-12)
            throw DomainError("linear profile slopes violate the unit-speed constraint");
        if (kind == SurfaceKind::elliptic && a < 1.0)
            throw DomainError("elliptic linear profile requires f' >= 1");
    }

    ProfileSample at(double u) const override {
        require_in_domain(u);
        ProfileSample s;
        s.f = a_ * u + a1_;
        s.g = b_ * u + b1_;
        s.df = a_;
        s.dg = b_;
        return s;
    }

private:
    double a_, a1_, b_, b1_;
};

class SampledProfile final : public ProfileCurve {
public:
    SampledProfile(SurfaceKind kind, double u_lo, double step, std::vector<ProfileSample> rows)
        : ProfileCurve(kind, u_lo, u_lo + step * (static_cast<double>(rows.size()) - 1.0)),
          step_(step),
          rows_(std::move(rows)) {
        if (rows_.size() < 4) throw DomainError("sampled profile needs at least 4 samples");
    }

    ProfileSample at(double u) const override {
        require_in_domain(u);
        const Interp4 w(u_lo_, step_, rows_.size(), u);
        ProfileSample s;
        auto mix = [&](double ProfileSample::*field) {
            return w.l[0] * rows_[w.i0 + 0].*field + w.l[1] * rows_[w.i0 + 1].*field +
                   w.l[2] * rows_[w.i0 + 2].*field + w.l[3] * rows_[w.i0 + 3].*field;
        };
        s.f = mix(&ProfileSample::f);
        s.g = mix(&ProfileSample::g);
        s.df = mix(&ProfileSample::df);
        s.dg = mix(&ProfileSample::dg);
        s.d2f = mix(&ProfileSample::d2f);
        s.d2g = mix(&ProfileSample::d2g);
        s.kappa_m = mix(&ProfileSample::kappa_m);
        s.dkappa_m = mix(&ProfileSample::dkappa_m);
        return s;
    }

private:
    double step_;
    std::vector<ProfileSample> rows_;
};

} // namespace

ProfileCurve::ProfileCurve(SurfaceKind kind, double u_lo, double u_hi)
    : kind_(kind), u_lo_(u_lo), u_hi_(u_hi) {
    if (!(u_hi > u_lo)) throw DomainError("profile domain is empty");
}

bool ProfileCurve::contains(double u) const {
    return u >= u_lo_ - kDomainSlack && u <= u_hi_ + kDomainSlack;
}

void ProfileCurve::require_in_domain(double u) const {
    if (!contains(u)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "u = %.9g outside profile domain [%.9g, %.9g]", u, u_lo_,
                      u_hi_);
        throw DomainError(msg);
    }
}

std::shared_ptr<const ProfileCurve> make_profile(SurfaceKind kind, Poly1 phi, double f0,
                                                 double g0, double u_lo, double u_hi) {
    auto p = std::make_shared<SlopeAngleProfile>(kind, std::move(phi), f0, g0, u_lo, u_hi);
    check_f_positive(*p);
    return p;
}

std::shared_ptr<const ProfileCurve> make_linear_profile(SurfaceKind kind, double a, double a1,
                                                        double b, double b1, double u_lo,
                                                        double u_hi) {
    auto p = std::make_shared<LinearProfile>(kind, a, a1, b, b1, u_lo, u_hi);
    check_f_positive(*p);
    return p;
}

std::shared_ptr<const ProfileCurve> make_constant_f_profile(double a, int g_slope, double b,
                                                            double u_lo, double u_hi) {
    if (g_slope != 1 && g_slope != -1)
        throw DomainError("constant-f profile requires g_slope = +1 or -1");
    return make_linear_profile(SurfaceKind::hyperbolic, 0.0, a, static_cast<double>(g_slope), b,
                               u_lo, u_hi);
}

std::shared_ptr<const ProfileCurve> make_sampled_profile(SurfaceKind kind, double u_lo,
                                                         double step,
                                                         std::vector<ProfileSample> samples) {
    auto p = std::make_shared<SampledProfile>(kind, u_lo, step, std::move(samples));
    check_f_positive(*p);
    return p;
}

double profile_curvature(const ProfileCurve& p, double u) { return p.at(u).kappa_m; }

} // namespace meridian
