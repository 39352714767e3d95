#ifndef CADET_AM_HPP
#define CADET_AM_HPP

// Design-support decision procedures. Every hypothesis is verified
// empirically (by exhaustive design checking or trivially through zero
// counts), never assumed from caller claims; when a budget prevents
// verification the verdict is Undecided rather than guessed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/code.hpp"
#include "cadet/designs.hpp"

namespace cadet::am {

struct Budgets {
    std::uint64_t codewords = code::kDefaultCodewordBudget;
    std::uint64_t design_steps = designs::kDefaultStepBudget;
};

enum class Verdict { Yes, No, Undecided };
std::string verdict_name(Verdict v);

struct Fact {
    std::string name;
    std::string value;
    bool ok = true;
};

struct AmReport {
    std::string mode;  // classic | generalized
    unsigned t = 0;
    unsigned nu = 0;
    unsigned d = 0, d_dual = 0;
    Verdict verdict = Verdict::Undecided;
    std::vector<Fact> facts;
    // Simplicity windows: block sets of C are repeat-free on [d, simple_w],
    // those of the dual on [d_dual, simple_w_dual].
    unsigned simple_w = 0, simple_w_dual = 0;
    std::vector<unsigned> s_set;  // generalized mode: the exempted weights S
    // Audit trail for t' < t: the exempt sets S_{t'} = S + {nu-t+1 .. nu-t'}.
    std::map<unsigned, std::vector<unsigned>> derived_s_sets;
};

// Classic criterion: with t < min(d, d_dual), the code supports t-designs
// if C has at most d_dual - t nonzero weights in {1, ..., nu-t}.
AmReport classic_am(const code::LinearCode& c, unsigned t, const Budgets& budgets = {});

// Generalized criterion: S a subset of {d, ..., nu} (entries above nu-t are
// exempt regardless and only enlarge the dual-side requirement); requires
// B_l(C) to be a verified t-design for every l in {d..nu-t} \ S with
// A_l > 0, and B_l(C_dual) for 0 <= l <= |S| + t - 1. On Yes the code and
// its dual support t-designs at every weight.
AmReport generalized_am(const code::LinearCode& c, unsigned t, std::vector<unsigned> s_set,
                        const Budgets& budgets = {});

struct CharacterizationReport {
    unsigned t = 0;
    // (1) every B_k(C) a t-design; (2) same for the dual; (3) shortened
    // distributions independent of T for all |T| = t' <= t; (4) same
    // punctured. (1)/(2) are evaluated only when enumeration fits budgets.
    std::optional<bool> designs_primal;
    std::optional<bool> designs_dual;
    bool shortened_invariant = false;
    bool punctured_invariant = false;
    std::optional<unsigned> failing_weight;  // witness when (1) evaluates false
    bool consistent = false;                 // all evaluated statements agree
    std::vector<Fact> facts;
};

CharacterizationReport characterization(const code::LinearCode& c, unsigned t,
                                        const Budgets& budgets = {});

}  // namespace cadet::am

#endif
