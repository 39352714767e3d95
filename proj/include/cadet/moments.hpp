#ifndef CADET_MOMENTS_HPP
#define CADET_MOMENTS_HPP

// Power-moment identities linking a code's weight distribution to its
// dual's, over exact rationals: identity checking, solving for unknown
// distribution entries, and the Krawtchouk dual transform. No floating
// point enters this module.

#include <cstdint>
#include <optional>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/code.hpp"

namespace cadet::moments {

// Stirling numbers of the second kind, S(t,j) = (1/j!) sum (-1)^(j-i) C(j,i) i^t.
Int stirling2(unsigned t, unsigned j);

// Right-hand side of the t-th power moment for an [nu, m] code over GF(q):
//   sum_i i^t A_i = sum_{i<=t} (-1)^i Adual_i [ sum_{j=i}^t j! S(t,j) q^(m-j) (q-1)^(j-i) C(nu-i, nu-j) ].
// dual_prefix must supply Adual_0 .. Adual_t. Individual terms can be
// fractional when t > m (q^(m-j) with j > m), so the result is a rational;
// the two sides still agree exactly for genuine code distributions.
Rat power_moment_rhs(unsigned nu, unsigned m, std::uint64_t q, unsigned t,
                     const std::vector<Int>& dual_prefix);

struct MomentCheck {
    bool ok = false;
    std::optional<unsigned> first_failing;  // smallest violated t
    unsigned t_max = 0;
};

// Verifies the moments for t = 0..t_max given both full distributions.
MomentCheck moment_check(std::uint64_t q, const code::WeightDistribution& a,
                         const code::WeightDistribution& a_dual, unsigned t_max);
// Same, with only a prefix Adual_0..Adual_t_max of the dual distribution.
MomentCheck moment_check_prefix(std::uint64_t q, unsigned m, const code::WeightDistribution& a,
                                const std::vector<Int>& dual_prefix, unsigned t_max);

struct SolveResult {
    code::WeightDistribution distribution;  // full A_0..A_nu with unknowns filled in
    std::vector<Int> dual_prefix_used;      // Adual_0..Adual_{s-1}
};

// Solves the first s = |unknown| moment equations for the unknown A_i,
// given every other A_i and the dual prefix Adual_1..Adual_{s-1}
// (Adual_0 = 1 implicitly). The solution must consist of nonnegative
// integers, otherwise a VerificationError signals inconsistent inputs.
SolveResult solve_distribution(unsigned nu, unsigned m, std::uint64_t q,
                               const std::vector<unsigned>& unknown,
                               const std::vector<Int>& known_a,
                               const std::vector<Int>& dual_prefix);

// Dual weight distribution via the Krawtchouk transform,
//   Adual_k = q^(-m) sum_i A_i K_k(i), K_k(i) = sum_j (-1)^j (q-1)^(k-j) C(i,j) C(nu-i, k-j).
// Exact; used where a dual is far too large to enumerate.
code::WeightDistribution macwilliams_dual(const code::WeightDistribution& a, unsigned m,
                                          std::uint64_t q);

// Number of weight-4 dual codewords of the length-2^n code of a
// differentially two-valued {0, 2^s} function: 2^(n-2) (2^n - 1)(2^(s-1) - 1) / 3.
Int a4_dual_from_two_valued(unsigned n, unsigned s);

}  // namespace cadet::moments

#endif
