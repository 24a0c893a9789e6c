#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "meridian/classify.hpp"
#include "meridian/laplacian_fd.hpp"
#include "meridian/ode.hpp"
#include "meridian/surface.hpp"

namespace meridian {

// Surface built from a JSON config (schema 1) together with its grid.
struct BuiltSurface {
    MeridianSurface surface;
    GridAxes grid;
    int nu = 0, nv = 0;
    double margin = 0.0;
    nlohmann::json echo; // the parsed config, for report echoes
};

// Throws ConfigError with the offending field path in the message.
BuiltSurface build_surface(const nlohmann::json& config);
BuiltSurface load_surface(const std::string& path);

// Tolerance ladder: defaults, overridden by a JSON file given explicitly or
// through the MERIDIAN_LAB_TOL environment variable (flag wins over env).
Tolerances load_tolerances(const std::optional<std::string>& cli_path);
nlohmann::json tolerances_to_json(const Tolerances& t);

nlohmann::json verdict_to_json(const ClassificationVerdict& v);
nlohmann::json laplacian_report_to_json(const LaplacianReport& r);

// Full 17-significant-digit round-trip formatting used by every CSV writer.
std::string fmt17(double x);

std::string ode_solution_csv(const OdeSolution& sol);

} // namespace meridian
