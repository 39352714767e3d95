#include "cadet/moments.hpp"

#include <stdexcept>
#include <string>

#include "cadet/errors.hpp"

namespace cadet::moments {

namespace {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// floor(log_q(total)): the dimension for genuine code distributions, and a
// best effort for corrupted ones (the t = 0 moment then reports the damage
// instead of this helper throwing).
unsigned dimension_from_total(const Int& total, std::uint64_t q) {
    Int t = total;
    unsigned m = 0;
    while (t >= q) {
        t /= q;
        ++m;
    }
    return m;
}

}  // namespace

Int stirling2(unsigned t, unsigned j) {
    if (j > t) throw std::invalid_argument("stirling2: need j <= t");
    Int sum = 0;
    for (unsigned i = 0; i <= j; ++i) {
        Int term = binom(j, i) * ipow(i, t);
        if ((j - i) % 2)
            sum -= term;
        else
            sum += term;
    }
    return exact_div(sum, factorial(j));
}

Rat power_moment_rhs(unsigned nu, unsigned m, std::uint64_t q, unsigned t,
                     const std::vector<Int>& dual_prefix) {
    if (dual_prefix.size() < t + 1)
        throw std::invalid_argument("power_moment_rhs: dual prefix must cover indices 0..t");
    Rat rhs = 0;
    for (unsigned i = 0; i <= t; ++i) {
        Rat bracket = 0;
        for (unsigned j = i; j <= t; ++j) {
            Rat term(factorial(j) * stirling2(t, j));
            term *= j <= m ? Rat(ipow(Int(q), m - j)) : Rat(Int(1), ipow(Int(q), j - m));
            term *= Rat(ipow(Int(q) - 1, j - i));
            term *= Rat(binom(nu - i, nu - j));
            bracket += term;
        }
        if (i % 2)
            rhs -= Rat(dual_prefix[i]) * bracket;
        else
            rhs += Rat(dual_prefix[i]) * bracket;
    }
    return rhs;
}

MomentCheck moment_check(std::uint64_t q, const code::WeightDistribution& a,
                         const code::WeightDistribution& a_dual, unsigned t_max) {
    if (a.nu != a_dual.nu) throw std::invalid_argument("moment_check: mismatched lengths");
    std::vector<Int> prefix(a_dual.counts.begin(),
                            a_dual.counts.begin() + std::min<size_t>(a_dual.counts.size(), t_max + 1));
    prefix.resize(t_max + 1, 0);
    const unsigned m = dimension_from_total(a.total(), q);
    return moment_check_prefix(q, m, a, prefix, t_max);
}

MomentCheck moment_check_prefix(std::uint64_t q, unsigned m, const code::WeightDistribution& a,
                                const std::vector<Int>& dual_prefix, unsigned t_max) {
    if (t_max > a.nu) throw std::invalid_argument("moment_check: t_max exceeds the length");
    MomentCheck res;
    res.t_max = t_max;
    res.ok = true;
    for (unsigned t = 0; t <= t_max; ++t) {
        Int lhs = 0;
        for (unsigned i = 0; i < a.counts.size(); ++i) lhs += ipow(i, t) * a.counts[i];
        if (Rat(lhs) != power_moment_rhs(a.nu, m, q, t, dual_prefix)) {
            res.ok = false;
            res.first_failing = t;
            break;
        }
    }
    return res;
}

SolveResult solve_distribution(unsigned nu, unsigned m, std::uint64_t q,
                               const std::vector<unsigned>& unknown, const std::vector<Int>& known_a,
                               const std::vector<Int>& dual_prefix) {
    if (known_a.size() != nu + 1)
        throw std::invalid_argument("solve_distribution: known_a must have nu+1 entries");
    const unsigned s = static_cast<unsigned>(unknown.size());
    for (unsigned i : unknown)
        if (i > nu) throw std::invalid_argument("solve_distribution: unknown index out of range");

    SolveResult out;
    out.distribution.nu = nu;
    out.distribution.counts = known_a;
    if (s == 0) {
        out.dual_prefix_used = {Int(1)};
        return out;
    }
    if (dual_prefix.size() + 1 < s)
        throw std::invalid_argument("solve_distribution: need Adual_1..Adual_{s-1}");
    out.dual_prefix_used.assign(s, 0);
    out.dual_prefix_used[0] = 1;  // Adual_0
    for (unsigned i = 1; i < s; ++i) out.dual_prefix_used[i] = dual_prefix[i - 1];

    // First s equations, unknowns moved to the left, known terms to the right.
    std::vector<std::vector<Rat>> aug(s, std::vector<Rat>(s + 1));
    for (unsigned t = 0; t < s; ++t) {
        Rat rhs = power_moment_rhs(nu, m, q, t, out.dual_prefix_used);
        for (unsigned i = 0; i <= nu; ++i) {
            bool is_unknown = false;
            for (unsigned u : unknown) is_unknown |= u == i;
            if (!is_unknown) rhs -= Rat(ipow(i, t) * known_a[i]);
        }
        for (unsigned k = 0; k < s; ++k) aug[t][k] = Rat(ipow(unknown[k], t));
        aug[t][s] = rhs;
    }

    // Exact Gaussian elimination with first-nonzero pivoting.
    for (unsigned col = 0; col < s; ++col) {
        unsigned sel = col;
        while (sel < s && aug[sel][col] == 0) ++sel;
        if (sel == s) throw VerificationError("solve_distribution: singular moment system");
        std::swap(aug[col], aug[sel]);
        const Rat piv = aug[col][col];
        for (unsigned j = col; j <= s; ++j) aug[col][j] /= piv;
        for (unsigned r = 0; r < s; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rat f = aug[r][col];
            for (unsigned j = col; j <= s; ++j) aug[r][j] -= f * aug[col][j];
        }
    }

    for (unsigned k = 0; k < s; ++k) {
        const Rat& v = aug[k][s];
        if (!is_integer(v) || v < 0)
            throw VerificationError("solve_distribution: A_" + std::to_string(unknown[k]) +
                                    " solves to the non-admissible value " +
                                    numerator(v).str() + "/" + denominator(v).str());
        out.distribution.counts[unknown[k]] = numerator(v);
    }
    return out;
}

code::WeightDistribution macwilliams_dual(const code::WeightDistribution& a, unsigned m,
                                          std::uint64_t q) {
    const unsigned nu = a.nu;
    code::WeightDistribution d;
    d.nu = nu;
    d.counts.assign(nu + 1, 0);
    const Int qm = ipow(Int(q), m);
    for (unsigned k = 0; k <= nu; ++k) {
        Int acc = 0;
        for (unsigned i = 0; i <= nu; ++i) {
            if (a.counts[i] == 0) continue;
            Int kraw = 0;
            for (unsigned j = 0; j <= k; ++j) {
                Int t = binom(i, j) * binom(nu - i, k - j) * ipow(Int(q) - 1, k - j);
                if (j % 2)
                    kraw -= t;
                else
                    kraw += t;
            }
            acc += a.counts[i] * kraw;
        }
        d.counts[k] = exact_div(acc, qm);
        if (d.counts[k] < 0)
            throw VerificationError("macwilliams_dual: negative count, input is not a code distribution");
    }
    return d;
}

Int a4_dual_from_two_valued(unsigned n, unsigned s) {
    if (s < 1 || s > n - 1) throw std::invalid_argument("a4_dual_from_two_valued: need 1 <= s <= n-1");
    Int num = ipow(Int(2), n - 2) * (ipow(Int(2), n) - 1) * (ipow(Int(2), s - 1) - 1);
    return exact_div(num, 3);
}

}  // namespace cadet::moments
