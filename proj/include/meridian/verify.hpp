#pragma once
#include <string>
#include <vector>

namespace meridian {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Named acceptance suites: "oracle" (criteria 1, 9), "harmonic" (2, 3),
// "first" (4, 5), "second" (6, 7, 8), "all" (everything in order).
std::vector<CriterionResult> run_suite(const std::string& suite, int jobs = 1);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace meridian
