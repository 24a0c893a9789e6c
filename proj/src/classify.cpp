#include "meridian/classify.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Constancy signature of the surface data over the grid axes; drives the
// taxonomy case detection.
struct CaseSignature {
    double kappa_mean = 0.0, kappa_dev = 0.0, kappa_abs_max = 0.0;
    double gprime_mean = 0.0, gprime_dev = 0.0, gprime_abs_max = 0.0;
    double kappam_abs_max = 0.0;
    double fprime_abs_max = 0.0;
    double fkappam_mean = 0.0, fkappam_dev = 0.0;
};

CaseSignature scan_signature(const MeridianSurface& s, const GridAxes& grid) {
    CaseSignature sig;
    const auto& base = s.base();
    double ksum = 0.0;
    for (double v : grid.vs) ksum += base.kappa(v);
    sig.kappa_mean = ksum / static_cast<double>(grid.vs.size());
    for (double v : grid.vs) {
        const double k = base.kappa(v);
        sig.kappa_dev = std::max(sig.kappa_dev, std::abs(k - sig.kappa_mean));
        sig.kappa_abs_max = std::max(sig.kappa_abs_max, std::abs(k));
    }
    double gsum = 0.0, fksum = 0.0;
    for (double u : grid.us) {
        const ProfileSample p = s.profile().at(u);
        gsum += p.dg;
        fksum += p.f * p.kappa_m;
    }
    sig.gprime_mean = gsum / static_cast<double>(grid.us.size());
    sig.fkappam_mean = fksum / static_cast<double>(grid.us.size());
    for (double u : grid.us) {
        const ProfileSample p = s.profile().at(u);
        sig.gprime_dev = std::max(sig.gprime_dev, std::abs(p.dg - sig.gprime_mean));
        sig.gprime_abs_max = std::max(sig.gprime_abs_max, std::abs(p.dg));
        sig.kappam_abs_max = std::max(sig.kappam_abs_max, std::abs(p.kappa_m));
        sig.fprime_abs_max = std::max(sig.fprime_abs_max, std::abs(p.df));
        sig.fkappam_dev =
            std::max(sig.fkappam_dev, std::abs(p.f * p.kappa_m - sig.fkappam_mean));
    }
    return sig;
}

} // namespace

const char* to_string(Category c) {
    switch (c) {
        case Category::harmonic: return "harmonic";
        case Category::first_kind: return "first_kind";
        case Category::second_kind: return "second_kind";
        case Category::none: return "none";
    }
    return "?";
}

const char* to_string(HyperplaneType t) { return t == HyperplaneType::e3 ? "E3" : "E31"; }

HarmonicCheck is_harmonic(const MeridianSurface& s, const GridAxes& grid, double tol,
                          int jobs) {
    std::vector<double> defects(grid.size(), 0.0);
    const std::size_t nv = grid.vs.size();
    grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
        defects[i * nv + j] = laplacian_closed(s, u, v).max_abs();
    });
    HarmonicCheck out;
    for (double d : defects) out.max_defect = std::max(out.max_defect, d);
    out.flag = out.max_defect <= tol;
    return out;
}

std::optional<double> first_kind_lambda(const MeridianSurface& s, double u, double v,
                                        double tol) {
    const SurfacePoint p = s.point(u, v);
    const Bivector dg = laplacian_closed(p, s.kind());
    const Bivector g = gauss_map(p);
    const double lambda = inner_biv(dg, g); // <G,G> = 1
    if ((dg - lambda * g).max_abs() > tol) return std::nullopt;
    if (std::abs(lambda) <= tol) return std::nullopt;
    return lambda;
}

double lambda_case1(SurfaceKind kind, double kappa, double f) {
    const double k2 = kappa * kappa;
    return (kind == SurfaceKind::elliptic ? k2 + 1.0 : 1.0 - k2) / (f * f);
}

double lambda_kappa_zero(SurfaceKind kind, const SurfacePoint& p) {
    const double f = p.prof.f, df = p.prof.df, dg = p.prof.dg;
    const double fkm2 = p.prof.f * p.prof.f * p.prof.kappa_m * p.prof.kappa_m;
    const double dfkm = p.prof.d_f_kappa_m();
    const double sign = (kind == SurfaceKind::elliptic) ? -1.0 : 1.0;
    return (dg * (1.0 + sign * fkm2) - f * df * dfkm) / (dg * f * f);
}

double lambda_subcase3(SurfaceKind kind, double kappa, double a, double f) {
    const double k2 = kappa * kappa, a2 = a * a;
    return (kind == SurfaceKind::elliptic ? 1.0 + k2 - a2 : 1.0 - k2 + a2) / (f * f);
}

SecondKindExtract second_kind_extract(const MeridianSurface& s, const GridAxes& grid,
                                      const LambdaFormula& lambda, double lambda_tol,
                                      int jobs) {
    const std::size_t n = grid.size();
    const std::size_t nv = grid.vs.size();
    std::vector<Bivector> c(n);
    std::vector<double> lambda_abs(n, 0.0);
    grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
        const SurfacePoint p = s.point(u, v);
        const double lam = lambda(p);
        lambda_abs[i * nv + j] = std::abs(lam);
        if (std::abs(lam) < lambda_tol) return;
        c[i * nv + j] = laplacian_closed(p, s.kind()) * (1.0 / lam) - gauss_map(p);
    });
    for (std::size_t k = 0; k < n; ++k)
        if (lambda_abs[k] < lambda_tol) throw SingularLambda("|lambda| fell below tolerance on the grid");

    std::array<double, 6> mean{};
    for (const Bivector& b : c) {
        const auto a = b.coords();
        for (int k = 0; k < 6; ++k) mean[k] += a[k];
    }
    for (int k = 0; k < 6; ++k) mean[k] /= static_cast<double>(n);

    SecondKindExtract out;
    out.c_estimate = Bivector::from_coords(mean);
    out.c_norm = out.c_estimate.max_abs();
    for (const Bivector& b : c)
        out.constancy_defect = std::max(out.constancy_defect, (b - out.c_estimate).max_abs());
    return out;
}

CheckResult marginally_trapped_check(const MeridianSurface& s, const GridAxes& grid, double tol,
                                     int jobs) {
    const std::size_t nv = grid.vs.size();
    std::vector<double> hh(grid.size()), hmax(grid.size());
    grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
        const SpacetimeVector h = mean_curvature_vector(s.point(u, v), s.kind());
        hh[i * nv + j] = std::abs(inner4(h, h));
        hmax[i * nv + j] = h.max_abs();
    });
    CheckResult out;
    out.aux = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        out.defect = std::max(out.defect, hh[k]);
        out.aux = std::min(out.aux, hmax[k]);
    }
    out.flag = out.defect <= tol && out.aux > tol;
    return out;
}

CheckResult developable_check(const MeridianSurface& s, const GridAxes& grid, double tol,
                              int jobs) {
    for (double u : grid.us)
        if (std::abs(s.profile().at(u).kappa_m) > tol) return {false, kNan, kNan};

    const std::size_t nv = grid.vs.size();
    std::vector<double> defects(grid.size(), 0.0);
    grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
        double h = std::min({1e-4, u - s.u_lo(), s.u_hi() - u});
        if (h <= 1e-9) return; // grid point on the boundary itself
        const FrameAtPoint a = s.frame(u - h, v);
        const FrameAtPoint b = s.frame(u + h, v);
        const double inv = 0.5 / h;
        const double d1 = ((b.n1 - a.n1) * inv).max_abs();
        const double d2 = ((b.n2 - a.n2) * inv).max_abs();
        defects[i * nv + j] = std::max(d1, d2);
    });
    CheckResult out;
    for (double d : defects) out.defect = std::max(out.defect, d);
    out.flag = out.defect <= tol;
    return out;
}

HyperplaneResult hyperplane_check(const MeridianSurface& s, const GridAxes& grid,
                                  HyperplaneType target, double tol) {
    // The rotation angle is constant only for straight profiles with constant
    // spherical curvature.
    CaseSignature sig = scan_signature(s, grid);
    if (sig.kappam_abs_max > tol) throw RegimeError("hyperplane rotation needs a straight profile");
    if (sig.kappa_dev > tol) throw RegimeError("hyperplane rotation needs constant spherical curvature");
    if (sig.gprime_dev > tol) throw RegimeError("hyperplane rotation needs constant g'");
    const double kappa = sig.kappa_mean;
    const double b = sig.gprime_mean;

    const bool ratio_b_over_k = (s.kind() == SurfaceKind::elliptic)
                                    ? (target == HyperplaneType::e3)
                                    : (target == HyperplaneType::e31);
    const double num = ratio_b_over_k ? b : kappa;
    const double den = ratio_b_over_k ? kappa : b;
    if (std::abs(den) < 1e-300 || std::abs(num) >= std::abs(den))
        throw RegimeError("hyperplane rotation log argument is not positive");
    const double r = num / den;
    const double theta = std::atanh(r);

    const double ch = std::cosh(theta), sh = std::sinh(theta);
    const bool check_n = target == HyperplaneType::e31; // E3 freezes the timelike normal
    const std::size_t nv = grid.vs.size();
    std::vector<SpacetimeVector> normals(grid.size());
    grid_for_each_serial(grid, [&](std::size_t i, std::size_t j, double u, double v) {
        const FrameAtPoint fr = s.frame(u, v);
        normals[i * nv + j] = check_n ? ch * fr.n1 + sh * fr.n2 : sh * fr.n1 + ch * fr.n2;
    });
    SpacetimeVector mean{};
    for (const auto& w : normals) mean = mean + w;
    mean = mean * (1.0 / static_cast<double>(grid.size()));

    HyperplaneResult out;
    out.type = target;
    out.theta = theta;
    for (const auto& w : normals) out.defect = std::max(out.defect, (w - mean).max_abs());
    out.flag = out.defect <= tol;
    return out;
}

ClassificationVerdict classify_surface(const MeridianSurface& s, const GridAxes& grid,
                                       const Tolerances& tol, int jobs) {
    ClassificationVerdict verdict;
    verdict.tolerances = tol;
    const SurfaceKind kind = s.kind();
    const bool ell = kind == SurfaceKind::elliptic;
    const CaseSignature sig = scan_signature(s, grid);

    const bool kappa_const = sig.kappa_dev <= tol.case_detect;
    const bool kappa_zero = sig.kappa_abs_max <= tol.case_detect;
    const bool gprime_zero = sig.gprime_abs_max <= tol.case_detect;
    const bool kappam_zero = sig.kappam_abs_max <= tol.case_detect;
    const bool fprime_zero = sig.fprime_abs_max <= tol.case_detect;
    const bool fkappam_const = sig.fkappam_dev <= tol.case_detect;

    // Side properties are attached whatever the category turns out to be.
    verdict.marginally_trapped = marginally_trapped_check(s, grid, tol.side, jobs);
    verdict.developable = developable_check(s, grid, tol.side, jobs);
    if (kappam_zero && kappa_const) {
        for (HyperplaneType target : {HyperplaneType::e3, HyperplaneType::e31}) {
            try {
                HyperplaneResult r = hyperplane_check(s, grid, target, tol.side);
                (target == HyperplaneType::e3 ? verdict.hyperplane_e3 : verdict.hyperplane_e31) = r;
            } catch (const RegimeError& e) {
                verdict.notes.push_back(std::string("hyperplane ") + to_string(target) + ": " +
                                        e.what());
            }
        }
    } else {
        verdict.notes.push_back("hyperplane checks skipped: curved profile or varying kappa");
    }

    const HarmonicCheck harmonic = is_harmonic(s, grid, tol.harmonic, jobs);
    verdict.harmonic_defect = harmonic.max_defect;

    const std::size_t nv = grid.vs.size();
    auto fill_lambda_samples = [&](const std::function<double(std::size_t, std::size_t, double,
                                                              double)>& value) {
        verdict.lambda_samples.assign(grid.size(), {0.0, 0.0, 0.0});
        grid_for_each_serial(grid, [&](std::size_t i, std::size_t j, double u, double v) {
            verdict.lambda_samples[i * nv + j] = {u, v, value(i, j, u, v)};
        });
        double sum = 0.0;
        for (const auto& t : verdict.lambda_samples) sum += t[2];
        verdict.lambda_mean = sum / static_cast<double>(verdict.lambda_samples.size());
    };
    auto raw_projection = [&](std::size_t, std::size_t, double u, double v) {
        const SurfacePoint p = s.point(u, v);
        return inner_biv(laplacian_closed(p, kind), gauss_map(p));
    };

    if (harmonic.flag) {
        verdict.category = Category::harmonic;
        if (ell)
            verdict.matched_theorem_case = "Thm 4.1";
        else if (kappa_zero && gprime_zero && kappam_zero)
            verdict.matched_theorem_case = "Thm 4.2(i)";
        else if (fprime_zero && kappa_const &&
                 std::abs(sig.kappa_abs_max - 1.0) <= tol.case_detect)
            verdict.matched_theorem_case = "Thm 4.2(ii)";
        fill_lambda_samples(raw_projection);
        return verdict;
    }

    // First kind: Delta G = lambda G pointwise, |lambda| bounded away from 0,
    // and the extracted C = Delta G / lambda - G negligibly small.
    {
        std::vector<double> lambdas(grid.size(), kNan);
        std::vector<double> c_defect(grid.size(), 0.0);
        std::vector<char> ok(grid.size(), 0);
        grid_for_each(grid, jobs, [&](std::size_t i, std::size_t j, double u, double v) {
            const auto lam = first_kind_lambda(s, u, v, tol.proportionality);
            if (!lam || std::abs(*lam) <= tol.lambda_min) return;
            const SurfacePoint p = s.point(u, v);
            const Bivector c =
                laplacian_closed(p, kind) * (1.0 / *lam) - gauss_map(p);
            lambdas[i * nv + j] = *lam;
            c_defect[i * nv + j] = c.max_abs();
            ok[i * nv + j] = 1;
        });
        bool all_ok = true;
        double worst_c = 0.0, worst_res = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            if (!ok[k]) {
                all_ok = false;
                break;
            }
            worst_c = std::max(worst_c, c_defect[k]);
        }
        if (all_ok && worst_c <= tol.c_constancy) {
            verdict.category = Category::first_kind;
            verdict.c_estimate = Bivector{};
            verdict.c_constancy_defect = worst_c;
            fill_lambda_samples([&](std::size_t i, std::size_t j, double, double) {
                return lambdas[i * nv + j];
            });
            // Residual of the proportionality over the grid.
            grid_for_each_serial(grid, [&](std::size_t i, std::size_t j, double u, double v) {
                const SurfacePoint p = s.point(u, v);
                const Bivector dg = laplacian_closed(p, kind);
                worst_res = std::max(
                    worst_res, (dg - lambdas[i * nv + j] * gauss_map(p)).max_abs());
            });
            verdict.first_kind_residual_max = worst_res;
            if (kappa_zero)
                verdict.matched_theorem_case = ell ? "Thm 5.1" : "Thm 5.2(i)";
            else if (!ell && fprime_zero && kappa_const)
                verdict.matched_theorem_case = "Thm 5.2(ii)";
            return verdict;
        }
    }

    // Second kind: pick the lambda formula from the detected case and demand
    // a constant, nonzero C.
    struct Candidate {
        LambdaFormula lambda;
        std::optional<std::string> tag;
    };
    std::vector<Candidate> candidates;
    const std::string thm = ell ? "Thm 6.1" : "Thm 6.2";
    if (gprime_zero && kappa_const && !kappa_zero)
        candidates.push_back({[kind, &sig](const SurfacePoint& p) {
                                  return lambda_case1(kind, sig.kappa_mean, p.prof.f);
                              },
                              thm + "(i)"});
    if (kappam_zero && !gprime_zero && kappa_const)
        candidates.push_back({[kind, &sig](const SurfacePoint& p) {
                                  return lambda_case1(kind, sig.kappa_mean, p.prof.f);
                              },
                              thm + "(ii)"});
    if (kappa_zero && !kappam_zero && !gprime_zero)
        candidates.push_back({[kind](const SurfacePoint& p) {
                                  return lambda_kappa_zero(kind, p);
                              },
                              thm + "(iii)"});
    if (kappa_const && !kappa_zero && fkappam_const && !kappam_zero &&
        std::abs(sig.fkappam_mean) > tol.case_detect)
        candidates.push_back({[kind, &sig](const SurfacePoint& p) {
                                  return lambda_subcase3(kind, sig.kappa_mean, sig.fkappam_mean,
                                                         p.prof.f);
                              },
                              std::nullopt});

    std::optional<SecondKindExtract> best;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        try {
            SecondKindExtract ext =
                second_kind_extract(s, grid, candidates[idx].lambda, tol.lambda_min, jobs);
            if (!best || ext.constancy_defect < best->constancy_defect) best = ext;
            if (ext.constancy_defect <= tol.c_constancy && ext.c_norm > tol.c_constancy) {
                verdict.category = Category::second_kind;
                verdict.matched_theorem_case = candidates[idx].tag;
                verdict.c_estimate = ext.c_estimate;
                verdict.c_constancy_defect = ext.constancy_defect;
                fill_lambda_samples([&](std::size_t, std::size_t, double u, double v) {
                    return candidates[idx].lambda(s.point(u, v));
                });
                if (!candidates[idx].tag)
                    verdict.notes.push_back(
                        "constant C found in the excluded constant-f*kappa_m case");
                return verdict;
            }
        } catch (const SingularLambda& e) {
            verdict.notes.push_back(std::string("second-kind extraction: ") + e.what());
        }
    }

    verdict.category = Category::none;
    if (best) {
        verdict.c_estimate = best->c_estimate;
        verdict.c_constancy_defect = best->constancy_defect;
        verdict.notes.push_back("closest second-kind attempt left a non-constant C");
    }
    fill_lambda_samples(raw_projection);
    return verdict;
}

} // namespace meridian
