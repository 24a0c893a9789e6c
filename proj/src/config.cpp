#include "meridian/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError("config." + where + ": " + what);
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) fail(where + "." + key, "missing");
    return require_number(obj.at(key), where + "." + key);
}

double get_number_or(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    return obj.at(key).get<double>();
}

std::pair<double, double> get_interval(const json& obj, const std::string& key,
                                       const std::string& where) {
    if (!obj.contains(key)) fail(where + "." + key, "missing");
    const json& j = obj.at(key);
    if (!j.is_array() || j.size() != 2) fail(where + "." + key, "expected [lo, hi]");
    const double lo = require_number(j[0], where + "." + key + "[0]");
    const double hi = require_number(j[1], where + "." + key + "[1]");
    if (!(hi > lo)) fail(where + "." + key, "needs hi > lo");
    return {lo, hi};
}

SurfaceKind parse_kind(const json& cfg) {
    if (!cfg.contains("kind")) fail("kind", "missing");
    const std::string k = cfg.at("kind").get<std::string>();
    if (k == "elliptic") return SurfaceKind::elliptic;
    if (k == "hyperbolic") return SurfaceKind::hyperbolic;
    fail("kind", "expected \"elliptic\" or \"hyperbolic\"");
}

Vec3 parse_vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) fail(where, "expected [a, b, c]");
    return {require_number(j[0], where), require_number(j[1], where),
            require_number(j[2], where)};
}

struct ProfileResult {
    std::shared_ptr<const ProfileCurve> profile;
    std::optional<std::pair<double, double>> span_override; // from an ODE solve
};

ProfileResult parse_profile(SurfaceKind kind, const json& cfg) {
    if (!cfg.contains("profile")) fail("profile", "missing");
    const json& p = cfg.at("profile");
    const std::string type = p.value("type", "");

    if (type == "slope_angle_polynomial") {
        if (!p.contains("coeffs") || !p.at("coeffs").is_array())
            fail("profile.coeffs", "expected an array of numbers");
        Poly1 phi;
        for (std::size_t i = 0; i < p.at("coeffs").size(); ++i)
            phi.coeffs.push_back(require_number(p.at("coeffs")[i], "profile.coeffs"));
        const auto [lo, hi] = get_interval(cfg, "u_domain", "");
        return {make_profile(kind, std::move(phi), get_number(p, "f0", "profile"),
                             get_number(p, "g0", "profile"), lo, hi),
                std::nullopt};
    }
    if (type == "constant_f") {
        if (kind != SurfaceKind::hyperbolic)
            fail("profile", "constant_f profiles exist only for the hyperbolic kind");
        const auto [lo, hi] = get_interval(cfg, "u_domain", "");
        const double slope = get_number(p, "g_slope", "profile");
        if (slope != 1.0 && slope != -1.0) fail("profile.g_slope", "expected +1 or -1");
        return {make_constant_f_profile(get_number(p, "a", "profile"),
                                        static_cast<int>(slope), get_number_or(p, "b", 0.0), lo,
                                        hi),
                std::nullopt};
    }
    if (type == "linear") {
        const auto [lo, hi] = get_interval(cfg, "u_domain", "");
        return {make_linear_profile(kind, get_number(p, "a", "profile"),
                                    get_number(p, "a1", "profile"),
                                    get_number(p, "b", "profile"),
                                    get_number(p, "b1", "profile"), lo, hi),
                std::nullopt};
    }
    if (type == "ode_solution") {
        const std::string case_name = p.value("case", "");
        OdeCase oc;
        if (case_name == "first_elliptic") oc = OdeCase::first_elliptic;
        else if (case_name == "first_hyperbolic") oc = OdeCase::first_hyperbolic;
        else if (case_name == "second_elliptic") oc = OdeCase::second_elliptic;
        else if (case_name == "second_hyperbolic") oc = OdeCase::second_hyperbolic;
        else fail("profile.case", "unknown ODE case");
        if (kind_of(oc) != kind) fail("profile.case", "ODE case kind disagrees with surface kind");

        const auto [lo, hi] = get_interval(p, "u_span", "profile");
        const double step = get_number_or(p, "step", 1e-4);
        OdeSolution sol;
        if (oc == OdeCase::first_elliptic || oc == OdeCase::first_hyperbolic)
            sol = solve_first_kind(kind, get_number(p, "f0", "profile"),
                                   get_number(p, "phi0", "profile"),
                                   get_number(p, "p0", "profile"), lo, hi, step);
        else
            sol = solve_second_kind(kind, get_number(p, "f0", "profile"),
                                    get_number(p, "df0", "profile"),
                                    get_number(p, "d2f0", "profile"),
                                    get_number(p, "c", "profile"), lo, hi, step);
        return {profile_from_solution(sol), std::make_pair(lo, hi)};
    }
    fail("profile.type", "unknown profile type \"" + type + "\"");
}

SphericalCurve parse_base(SurfaceKind kind, const json& cfg) {
    if (!cfg.contains("base")) fail("base", "missing");
    const json& b = cfg.at("base");

    SphericalCurveSpec spec;
    spec.kind = kind;
    if (!b.contains("kappa")) fail("base.kappa", "missing");
    const json& k = b.at("kappa");
    if (k.is_number()) {
        spec.kappa = KappaFunction::constant(k.get<double>());
    } else if (k.is_object() && k.contains("coeffs")) {
        Poly1 poly;
        for (std::size_t i = 0; i < k.at("coeffs").size(); ++i)
            poly.coeffs.push_back(require_number(k.at("coeffs")[i], "base.kappa.coeffs"));
        spec.kappa = KappaFunction::poly(std::move(poly));
    } else {
        fail("base.kappa", "expected a number or {\"coeffs\": [...]}");
    }

    const auto [lo, hi] = get_interval(b, "v_domain", "base");
    spec.v_lo = lo;
    spec.v_hi = hi;
    spec.step = get_number_or(b, "step", 1e-4);
    if (!(spec.step > 0.0)) fail("base.step", "must be positive");

    if (b.contains("initial_frame")) {
        const json& fr = b.at("initial_frame");
        spec.initial.l = parse_vec3(fr.at("l"), "base.initial_frame.l");
        spec.initial.t = parse_vec3(fr.at("t"), "base.initial_frame.t");
        spec.initial.n = parse_vec3(fr.at("n"), "base.initial_frame.n");
    } else {
        spec.initial = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    }
    return integrate_spherical(spec);
}

} // namespace

BuiltSurface build_surface(const nlohmann::json& config) {
    if (!config.is_object()) throw ConfigError("config: expected a JSON object");
    if (config.value("schema", 0) != 1) fail("schema", "expected 1");

    const SurfaceKind kind = parse_kind(config);
    ProfileResult prof = parse_profile(kind, config);
    SphericalCurve base = parse_base(kind, config);
    MeridianSurface surface(prof.profile, std::move(base));

    int nu = 50, nv = 50;
    double margin = 0.05;
    if (config.contains("grid")) {
        const json& g = config.at("grid");
        nu = static_cast<int>(get_number_or(g, "nu", 50));
        nv = static_cast<int>(get_number_or(g, "nv", 50));
        margin = get_number_or(g, "margin", 0.05);
    }

    BuiltSurface out{std::move(surface), GridAxes{}, nu, nv, margin, config};
    out.grid = make_axes(out.surface, nu, nv, margin);
    return out;
}

BuiltSurface load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return build_surface(cfg);
}

Tolerances load_tolerances(const std::optional<std::string>& cli_path) {
    std::optional<std::string> path = cli_path;
    if (!path) {
        if (const char* env = std::getenv("MERIDIAN_LAB_TOL")) path = std::string(env);
    }
    Tolerances t;
    if (!path) return t;
    std::ifstream in(*path);
    if (!in) throw ConfigError("tolerances: cannot open " + *path);
    json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("tolerances: ") + e.what());
    }
    t.harmonic = j.value("harmonic", t.harmonic);
    t.proportionality = j.value("proportionality", t.proportionality);
    t.c_constancy = j.value("c_constancy", t.c_constancy);
    t.side = j.value("side", t.side);
    t.case_detect = j.value("case_detect", t.case_detect);
    t.lambda_min = j.value("lambda_min", t.lambda_min);
    return t;
}

nlohmann::json tolerances_to_json(const Tolerances& t) {
    return {{"harmonic", t.harmonic},         {"proportionality", t.proportionality},
            {"c_constancy", t.c_constancy},   {"side", t.side},
            {"case_detect", t.case_detect},   {"lambda_min", t.lambda_min}};
}

namespace {

nlohmann::json bivector_to_json(const Bivector& b) {
    nlohmann::json j = nlohmann::json::array();
    for (double c : b.coords()) j.push_back(c);
    return j;
}

nlohmann::json check_to_json(const CheckResult& c, bool with_aux) {
    nlohmann::json j{{"flag", c.flag}, {"defect", c.defect}};
    if (with_aux) j["min_h_norm"] = c.aux;
    return j;
}

nlohmann::json hyperplane_to_json(const std::optional<HyperplaneResult>& h) {
    if (!h) return nullptr;
    return {{"flag", h->flag}, {"type", to_string(h->type)}, {"theta", h->theta},
            {"defect", h->defect}};
}

} // namespace

nlohmann::json verdict_to_json(const ClassificationVerdict& v) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& t : v.lambda_samples) samples.push_back({t[0], t[1], t[2]});

    nlohmann::json j;
    j["category"] = to_string(v.category);
    j["matched_theorem_case"] =
        v.matched_theorem_case ? nlohmann::json(*v.matched_theorem_case) : nullptr;
    j["lambda_mean"] = v.lambda_mean;
    j["lambda_samples"] = std::move(samples);
    j["c_estimate"] = v.c_estimate ? bivector_to_json(*v.c_estimate) : nlohmann::json(nullptr);
    j["c_constancy_defect"] =
        v.c_constancy_defect ? nlohmann::json(*v.c_constancy_defect) : nullptr;
    j["harmonic_defect"] = v.harmonic_defect;
    j["first_kind_residual_max"] =
        v.first_kind_residual_max ? nlohmann::json(*v.first_kind_residual_max) : nullptr;
    j["side_properties"] = {{"marginally_trapped", check_to_json(v.marginally_trapped, true)},
                            {"developable", check_to_json(v.developable, false)},
                            {"hyperplane_e3", hyperplane_to_json(v.hyperplane_e3)},
                            {"hyperplane_e31", hyperplane_to_json(v.hyperplane_e31)}};
    j["tolerances"] = tolerances_to_json(v.tolerances);
    j["notes"] = v.notes;
    return j;
}

nlohmann::json laplacian_report_to_json(const LaplacianReport& r) {
    return {{"u", r.u},
            {"v", r.v},
            {"h", r.h},
            {"closed_form", bivector_to_json(r.closed_form)},
            {"finite_diff", bivector_to_json(r.finite_diff)},
            {"defect", r.defect}};
}

std::string fmt17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string ode_solution_csv(const OdeSolution& sol) {
    std::ostringstream out;
    out << "# meridian ode solution case=" << to_string(sol.case_tag)
        << " step=" << fmt17(sol.step) << " residual_max=" << fmt17(sol.residual_max) << "\n";
    out << "u,f,df,d2f,residual\n";
    for (std::size_t i = 0; i < sol.rows.size(); ++i) {
        const OdeRow& r = sol.rows[i];
        out << fmt17(r.u) << ',' << fmt17(r.f) << ',' << fmt17(r.df) << ',' << fmt17(r.d2f)
            << ',' << fmt17(i < sol.residuals.size() ? sol.residuals[i] : 0.0) << "\n";
    }
    return out.str();
}

} // namespace meridian
