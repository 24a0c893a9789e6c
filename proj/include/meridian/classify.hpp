#pragma once
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meridian/grid.hpp"
#include "meridian/laplacian_fd.hpp"
#include "meridian/surface.hpp"

namespace meridian {

enum class Category { harmonic, first_kind, second_kind, none };
enum class HyperplaneType { e3, e31 };

const char* to_string(Category c);
const char* to_string(HyperplaneType t);

// Defaults calibrated for unit-scale surfaces (f in [0.5, 5]); the identities
// being checked are exact, tolerances only absorb discretization error.
struct Tolerances {
    double harmonic = 1e-6;        // max |Delta G| for the harmonic verdict
    double proportionality = 1e-5; // |Delta G - lambda G| residual, first kind
    double c_constancy = 1e-6;     // max-abs deviation of C from its grid mean
    double side = 1e-6;            // side-property defects
    double case_detect = 1e-6;     // constancy detections (kappa const, g' = 0, ...)
    double lambda_min = 1e-5;      // |lambda| floor
};

struct CheckResult {
    bool flag = false;
    double defect = 0.0;
    double aux = 0.0; // marginally trapped: min max-abs coordinate of H
};

struct HyperplaneResult {
    bool flag = false;
    HyperplaneType type = HyperplaneType::e3;
    double theta = 0.0;
    double defect = 0.0;
};

struct SecondKindExtract {
    Bivector c_estimate;          // grid mean, ambient coordinates
    double constancy_defect = 0.0; // max-abs coordinate deviation from the mean
    double c_norm = 0.0;           // max-abs coordinate of the mean
};

struct ClassificationVerdict {
    Category category = Category::none;
    std::optional<std::string> matched_theorem_case;
    std::vector<std::array<double, 3>> lambda_samples; // (u, v, lambda), row-major
    double lambda_mean = 0.0;
    std::optional<Bivector> c_estimate;
    std::optional<double> c_constancy_defect;
    double harmonic_defect = 0.0;            // max over grid of |Delta G|_inf
    std::optional<double> first_kind_residual_max;
    CheckResult marginally_trapped;
    CheckResult developable;
    std::optional<HyperplaneResult> hyperplane_e3;
    std::optional<HyperplaneResult> hyperplane_e31;
    Tolerances tolerances;
    std::vector<std::string> notes; // sub-operation errors, informational
};

// True iff the closed-form Laplacian vanishes on the whole grid within tol.
struct HarmonicCheck {
    bool flag = false;
    double max_defect = 0.0;
};
HarmonicCheck is_harmonic(const MeridianSurface& s, const GridAxes& grid, double tol,
                          int jobs = 1);

// lambda = <Delta G, G> (valid because <G,G> = 1); returned only when the
// residual |Delta G - lambda G|_inf stays within tol and |lambda| > tol.
std::optional<double> first_kind_lambda(const MeridianSurface& s, double u, double v,
                                        double tol);

// Pointwise C = Delta G / lambda - G in ambient bivector coordinates, with
// the case's closed-form lambda; throws SingularLambda if |lambda| < tol
// anywhere on the grid.
using LambdaFormula = std::function<double(const SurfacePoint&)>;
SecondKindExtract second_kind_extract(const MeridianSurface& s, const GridAxes& grid,
                                      const LambdaFormula& lambda, double lambda_tol,
                                      int jobs = 1);

// Closed-form lambda of the taxonomy cases.
double lambda_case1(SurfaceKind kind, double kappa, double f);
double lambda_kappa_zero(SurfaceKind kind, const SurfacePoint& p);
double lambda_subcase3(SurfaceKind kind, double kappa, double a, double f);

// max |<H,H>| <= tol with min |H|_inf > tol over the grid.
CheckResult marginally_trapped_check(const MeridianSurface& s, const GridAxes& grid, double tol,
                                     int jobs = 1);

// Straight-profile surfaces whose normal space is constant along each ruling;
// finite differences of n1, n2 along u. False immediately if kappa_m != 0.
CheckResult developable_check(const MeridianSurface& s, const GridAxes& grid, double tol,
                              int jobs = 1);

// Rotate {n1, n2} by the constant angle theta = artanh(r) that freezes one
// normal, and verify that normal is constant over the grid in ambient
// coordinates. Throws RegimeError when the target regime does not apply
// (log argument <= 0, kappa not constant, or curved profile).
HyperplaneResult hyperplane_check(const MeridianSurface& s, const GridAxes& grid,
                                  HyperplaneType target, double tol);

// Predicate chain harmonic > first kind > second kind, with the second-kind
// lambda formula picked from the detected case; side properties attached.
ClassificationVerdict classify_surface(const MeridianSurface& s, const GridAxes& grid,
                                       const Tolerances& tol, int jobs = 1);

} // namespace meridian
