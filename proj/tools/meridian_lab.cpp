#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "meridian/classify.hpp"
#include "meridian/config.hpp"
#include "meridian/errors.hpp"
#include "meridian/laplacian_fd.hpp"
#include "meridian/ode.hpp"
#include "meridian/verify.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::optional<std::string>& out_path) {
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw meridian::ConfigError("cannot open output file " + *out_path);
        out << text;
    } else {
        std::cout << text;
    }
}

int cmd_classify(const std::string& config_path, const std::optional<std::string>& out_path,
                 const std::optional<std::string>& tol_path, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    meridian::BuiltSurface built = meridian::load_surface(config_path);
    const meridian::Tolerances tol = meridian::load_tolerances(tol_path);
    const meridian::ClassificationVerdict verdict =
        meridian::classify_surface(built.surface, built.grid, tol, jobs);

    json summary;
    try {
        const double h = 1e-3;
        const auto cmp = meridian::compare_laplacians(built.surface, built.grid, h, jobs);
        summary = {{"h", h},
                   {"grid", {built.nu, built.nv}},
                   {"max_defect", cmp.max_defect}};
    } catch (const meridian::Error& e) {
        summary = {{"error", e.what()}};
    }

    const auto t1 = std::chrono::steady_clock::now();
    json report;
    report["schema"] = 1;
    report["config"] = built.echo;
    report["verdict"] = meridian::verdict_to_json(verdict);
    report["laplacian_summary"] = summary;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    emit(report.dump(2) + "\n", out_path);
    return verdict.category == meridian::Category::none ? 2 : 0;
}

int cmd_verify(const std::string& suite, const std::optional<std::string>& out_path, int jobs) {
    const auto results = meridian::run_suite(suite, jobs);
    for (const auto& r : results)
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                  << " -- " << r.detail << "\n";

    if (out_path) {
        json j;
        j["suite"] = suite;
        j["pass"] = meridian::all_passed(results);
        j["checks"] = json::array();
        for (const auto& r : results)
            j["checks"].push_back(
                {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit(j.dump(2) + "\n", out_path);
    }
    return meridian::all_passed(results) ? 0 : 1;
}

int cmd_solve_ode(const std::string& case_name, double f0, double phi0, double p0, double df0,
                  double d2f0, double c, double u0, double u1, double step,
                  const std::optional<std::string>& out_path) {
    meridian::OdeSolution sol;
    if (case_name == "first_elliptic")
        sol = meridian::solve_first_kind(meridian::SurfaceKind::elliptic, f0, phi0, p0, u0, u1,
                                         step);
    else if (case_name == "first_hyperbolic")
        sol = meridian::solve_first_kind(meridian::SurfaceKind::hyperbolic, f0, phi0, p0, u0,
                                         u1, step);
    else if (case_name == "second_elliptic")
        sol = meridian::solve_second_kind(meridian::SurfaceKind::elliptic, f0, df0, d2f0, c, u0,
                                          u1, step);
    else if (case_name == "second_hyperbolic")
        sol = meridian::solve_second_kind(meridian::SurfaceKind::hyperbolic, f0, df0, d2f0, c,
                                          u0, u1, step);
    else
        throw meridian::ConfigError("unknown ODE case \"" + case_name + "\"");

    emit(meridian::ode_solution_csv(sol), out_path);
    std::cerr << "case=" << meridian::to_string(sol.case_tag)
              << " span=[" << meridian::fmt17(sol.u_lo) << ", " << meridian::fmt17(sol.u_hi())
              << "] residual_max=" << meridian::fmt17(sol.residual_max) << "\n";
    return 0;
}

int cmd_sample(const std::string& config_path, const std::optional<std::string>& out_path) {
    meridian::BuiltSurface built = meridian::load_surface(config_path);
    std::string text;
    text += "# meridian surface point cloud\n";
    text += std::string("# kind=") + meridian::to_string(built.surface.kind()) +
            " nu=" + std::to_string(built.nu) + " nv=" + std::to_string(built.nv) +
            " margin=" + meridian::fmt17(built.margin) + "\n";
    text += "u,v,x1,x2,x3,x4\n";
    for (double u : built.grid.us)
        for (double v : built.grid.vs) {
            const meridian::SpacetimeVector z = built.surface.immersion(u, v);
            text += meridian::fmt17(u) + "," + meridian::fmt17(v) + "," + meridian::fmt17(z.x1) +
                    "," + meridian::fmt17(z.x2) + "," + meridian::fmt17(z.x3) + "," +
                    meridian::fmt17(z.x4) + "\n";
        }
    emit(text, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"meridian-lab: construct, verify and classify meridian surfaces in R^4_1"};
    app.require_subcommand(1);

    std::string config_path, suite = "all", case_name;
    std::optional<std::string> out_path, tol_path;
    int jobs = 1;
    double f0 = 1.0, phi0 = 0.5, p0 = 0.3, df0 = 1.5, d2f0 = 0.5, c = 1.0;
    double u0 = 0.0, u1 = 1.0, step = 1e-4;

    auto* classify = app.add_subcommand("classify", "classify a surface from a JSON config");
    classify->add_option("--config", config_path, "surface config path")->required();
    classify->add_option("--out", out_path, "write the JSON report here instead of stdout");
    classify->add_option("--tol-file", tol_path, "tolerance ladder JSON path");
    classify->add_option("--jobs", jobs, "worker count for grid scans");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->add_option("suite", suite, "all|harmonic|first|second|oracle");
    verify->add_option("--out", out_path, "write the JSON summary here");
    verify->add_option("--jobs", jobs, "worker count for grid scans");

    auto* solve = app.add_subcommand("solve-ode", "integrate a classifying ODE");
    solve->add_option("--case", case_name,
                      "first_elliptic|first_hyperbolic|second_elliptic|second_hyperbolic")
        ->required();
    solve->add_option("--f0", f0, "initial f");
    solve->add_option("--phi0", phi0, "initial slope angle (first kind)");
    solve->add_option("--p0", p0, "initial f*kappa_m (first kind)");
    solve->add_option("--df0", df0, "initial f' (second kind)");
    solve->add_option("--d2f0", d2f0, "initial f'' (second kind)");
    solve->add_option("--c", c, "first-integral constant (second kind)");
    solve->add_option("--u0", u0, "span start");
    solve->add_option("--u1", u1, "span end");
    solve->add_option("--step", step, "RK4 step");
    solve->add_option("--out", out_path, "write the CSV here instead of stdout");

    auto* sample = app.add_subcommand("sample", "export the surface point cloud as CSV");
    sample->add_option("--config", config_path, "surface config path")->required();
    sample->add_option("--out", out_path, "write the CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(config_path, out_path, tol_path, jobs);
        if (verify->parsed()) return cmd_verify(suite, out_path, jobs);
        if (solve->parsed())
            return cmd_solve_ode(case_name, f0, phi0, p0, df0, d2f0, c, u0, u1, step, out_path);
        if (sample->parsed()) return cmd_sample(config_path, out_path);
    } catch (const meridian::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return solve->parsed() ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
