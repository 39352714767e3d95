#ifndef CADET_REPRO_HPP
#define CADET_REPRO_HPP

// End-to-end reproduction suite: rebuilds the library's reference examples
// from scratch (bent and bent-vectorial codes on GF(2^6), the ternary trace
// code, Kasami power maps) and cross-checks every closed form against
// exhaustive enumeration. Shared by the acceptance test binary and the
// `repro paper-examples` CLI subcommand.

#include <string>
#include <vector>

#include "cadet/code.hpp"

namespace cadet::repro {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first mismatch, or a short summary when passing
    double seconds = 0;
};

// Known subset names, in criterion order.
std::vector<std::string> subsets();

// Runs all criteria ("all") or a single named subset.
std::vector<CriterionResult> run_acceptance(const std::string& subset = "all");

// Deterministic search for a small binary code that does NOT support
// t-designs (its shortened distributions depend on T) yet satisfies
// t < min(d, d_dual). Used by the characterization criterion and tests.
code::LinearCode random_non_design_code(unsigned nu, unsigned m, unsigned t,
                                        std::uint64_t seed);

}  // namespace cadet::repro

#endif
