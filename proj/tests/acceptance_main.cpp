// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Optional argv[1] restricts the run to a single named criterion.

#include <cstdio>
#include <string>

#include "cadet/repro.hpp"

int main(int argc, char** argv) {
    const std::string subset = argc > 1 ? argv[1] : "all";
    const auto results = cadet::repro::run_acceptance(subset);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s criterion %2d [%s] (%.2fs): %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        failures += !r.pass;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
    return failures;
}
