// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <exception>

#include "meridian/verify.hpp"

int main() {
    try {
        const auto results = meridian::run_suite("all", 1);
        bool ok = true;
        for (const auto& r : results) {
            std::printf("[%s] criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.detail.c_str());
            ok = ok && r.pass;
        }
        std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 2;
    }
}
