#ifndef CADET_DESIGNS_HPP
#define CADET_DESIGNS_HPP

// Support designs of linear codes and exhaustive t-design verification:
// block multisets, the per-t-subset coverage count, intersection numbers,
// complement designs, big-block promotion and the simplicity bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/code.hpp"

namespace cadet::designs {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000'000ull;

struct DesignParams {
    unsigned t = 0, k = 0;
    Int lambda;
};

struct Design {
    unsigned nu = 0;
    // Blocks are sorted point lists in global lexicographic order,
    // deduplicated with multiplicities >= 1.
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint64_t> mult;
    std::optional<DesignParams> declared;

    std::uint64_t block_count_with_multiplicity() const;
    bool is_simple() const;

    // Normalizes a raw block list (sorts points, merges duplicates).
    static Design from_blocks(unsigned nu, std::vector<std::vector<std::uint32_t>> raw);
};

// Supports of weight-w codewords, multiplicities divided by q-1 exactly.
Design support_design(const code::LinearCode& c, unsigned w,
                      std::uint64_t budget = code::kDefaultCodewordBudget);

enum class CountingSide { Auto, Blocks, Points };

// Exhaustive verification: counts, for every t-subset of points, the total
// multiplicity of blocks containing it. Returns the common count lambda if
// the design is a t-design, nullopt otherwise. The cheaper of the two
// counting strategies (enumerate each block's t-subsets vs scan blocks per
// t-subset) is chosen automatically unless forced.
std::optional<Int> is_t_design(const Design& d, unsigned t,
                               std::uint64_t step_budget = kDefaultStepBudget,
                               CountingSide side = CountingSide::Auto);

// Intersection number of a t-(nu,k,lambda) design: blocks containing a fixed
// t1-set and disjoint from a fixed t0-set, t0 + t1 <= t:
//   lambda(t0, t1) = C(nu-t0-t1, k-t1) / C(nu-t, k-t) * lambda.
Rat intersection_number(unsigned nu, unsigned k, const Int& lambda, unsigned t, unsigned t0,
                        unsigned t1);

// Exhaustive intersection count on explicit blocks (oracle for the above).
Int count_blocks_containing_avoiding(const Design& d, const std::vector<std::uint32_t>& t1_set,
                                     const std::vector<std::uint32_t>& t0_set);

// Complement blocks of a t-(nu,k,lambda) design with t <= k <= nu-t:
// a t-(nu, nu-k, lambda_bar) design, lambda_bar = C(nu-t,k)/C(nu-t,k-t) * lambda.
Design complement_design(const Design& d);

// A (nu-k)-(nu,k,lambda) design with 1 <= nu-k <= t <= k is also a t-design:
// lambda' = C(nu-t, nu-k) * lambda / C(nu-t, k-t).
Rat promoted_lambda(unsigned nu, unsigned k, const Int& lambda, unsigned t);

// Largest w <= nu with w - floor((w+q-2)/(q-1)) < d; block sets B_k are
// repeat-free for d <= k <= w.
unsigned simplicity_w(std::uint64_t q, unsigned d, unsigned nu);

}  // namespace cadet::designs

#endif
