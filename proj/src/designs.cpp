#include "cadet/designs.hpp"

#include <algorithm>
#include <stdexcept>

#include "cadet/errors.hpp"

namespace cadet::designs {

namespace {

// C(n, r) clamped into uint64 (inputs here keep it well in range).
std::uint64_t binom64(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
    }
    return out;
}

// Combinadic rank of a sorted t-subset: sum C(s_i, i+1).
std::uint64_t subset_rank(const std::uint32_t* s, unsigned t) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < t; ++i) r += binom64(s[i], i + 1);
    return r;
}

// Calls fn on every sorted t-subset of {0..n-1} (odometer order).
template <class Fn>
void for_each_subset(unsigned n, unsigned t, Fn&& fn) {
    if (t > n) return;
    std::vector<std::uint32_t> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int pos = static_cast<int>(t) - 1;
        while (pos >= 0 && idx[pos] == n - t + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned j = pos + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::uint64_t> block_mask(const std::vector<std::uint32_t>& block, unsigned nu) {
    std::vector<std::uint64_t> m((nu + 63) / 64, 0);
    for (auto p : block) m[p / 64] |= 1ull << (p % 64);
    return m;
}

}  // namespace

std::uint64_t Design::block_count_with_multiplicity() const {
    std::uint64_t b = 0;
    for (auto m : mult) b += m;
    return b;
}

bool Design::is_simple() const {
    for (auto m : mult)
        if (m != 1) return false;
    return true;
}

Design Design::from_blocks(unsigned nu, std::vector<std::vector<std::uint32_t>> raw) {
    Design d;
    d.nu = nu;
    for (auto& b : raw) {
        std::sort(b.begin(), b.end());
        for (auto p : b)
            if (p >= nu) throw std::invalid_argument("design: point out of range");
    }
    std::sort(raw.begin(), raw.end());
    for (auto& b : raw) {
        if (!d.blocks.empty() && d.blocks.back() == b) {
            d.mult.back()++;
        } else {
            d.blocks.push_back(std::move(b));
            d.mult.push_back(1);
        }
    }
    return d;
}

Design support_design(const code::LinearCode& c, unsigned w, std::uint64_t budget) {
    if (w == 0) {
        // Supp(0) is empty; the block covers no t-subset, which is exactly
        // the empty-design convention.
        Design d;
        d.nu = c.length();
        return d;
    }
    auto supports = c.supports_of_weight(w, budget);
    Design d = Design::from_blocks(c.length(), std::move(supports));
    const std::uint64_t q1 = c.field()->q() - 1;
    for (auto& m : d.mult) {
        if (m % q1 != 0)
            throw VerificationError("support_design: multiplicity not divisible by q-1");
        m /= q1;
    }
    return d;
}

std::optional<Int> is_t_design(const Design& d, unsigned t, std::uint64_t step_budget,
                               CountingSide side) {
    if (t < 1) throw std::invalid_argument("is_t_design: need t >= 1");
    if (d.blocks.empty()) return Int(0);
    std::uint64_t min_k = d.nu;
    Int cost_blocks = 0;
    for (const auto& b : d.blocks) {
        min_k = std::min<std::uint64_t>(min_k, b.size());
        cost_blocks += binom(static_cast<long long>(b.size()), t);
    }
    if (t > min_k)
        throw std::invalid_argument("is_t_design: t exceeds the smallest block size");

    // Costs are sized in exact arithmetic first: C(nu, t) overflows 64 bits
    // long before any feasible budget does.
    const Int n_subsets_big = binom(d.nu, t);
    const Int cost_points_big = n_subsets_big * Int(d.blocks.size());
    if (side == CountingSide::Auto) {
        // The block-side pass also pays one scan over the dense counter
        // array, so it wins only while that array stays reasonable.
        const bool dense_ok = n_subsets_big <= (1ull << 26);
        side = dense_ok && cost_blocks + n_subsets_big <= cost_points_big ? CountingSide::Blocks
                                                                          : CountingSide::Points;
    }

    if (side == CountingSide::Blocks) {
        if (cost_blocks + n_subsets_big > step_budget)
            throw BudgetError("is_t_design: block-side cost exceeds the step budget");
        if (n_subsets_big > (1ull << 28))
            throw BudgetError("is_t_design: t-subset counter array exceeds the memory budget");
        const auto n_subsets = n_subsets_big.convert_to<std::uint64_t>();
        std::vector<std::uint64_t> counts(n_subsets, 0);
        for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
            const auto& block = d.blocks[bi];
            const std::uint64_t m = d.mult[bi];
            std::vector<std::uint32_t> pts(t);
            for_each_subset(static_cast<unsigned>(block.size()), t, [&](const auto& idx) {
                for (unsigned i = 0; i < t; ++i) pts[i] = block[idx[i]];
                counts[subset_rank(pts.data(), t)] += m;
            });
        }
        const std::uint64_t lambda = counts[0];
        for (std::uint64_t c : counts)
            if (c != lambda) return std::nullopt;
        return Int(lambda);
    }

    // Point side: scan all blocks per t-subset through packed masks.
    if (cost_points_big > step_budget)
        throw BudgetError("is_t_design: point-side cost exceeds the step budget");
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(d.blocks.size());
    for (const auto& b : d.blocks) masks.push_back(block_mask(b, d.nu));
    std::optional<std::uint64_t> lambda;
    bool uniform = true;
    for_each_subset(d.nu, t, [&](const std::vector<std::uint32_t>& pts) {
        if (!uniform) return;
        std::uint64_t cover = 0;
        for (size_t bi = 0; bi < masks.size(); ++bi) {
            bool in = true;
            for (unsigned i = 0; i < t && in; ++i)
                in = masks[bi][pts[i] / 64] >> (pts[i] % 64) & 1;
            if (in) cover += d.mult[bi];
        }
        if (!lambda)
            lambda = cover;
        else if (*lambda != cover)
            uniform = false;
    });
    if (!uniform) return std::nullopt;
    return Int(*lambda);
}

Rat intersection_number(unsigned nu, unsigned k, const Int& lambda, unsigned t, unsigned t0,
                        unsigned t1) {
    if (t0 + t1 > t || t > k || k > nu)
        throw std::invalid_argument("intersection_number: need t0+t1 <= t <= k <= nu");
    return Rat(binom(nu - t0 - t1, k - t1) * lambda, binom(nu - t, k - t));
}

Int count_blocks_containing_avoiding(const Design& d, const std::vector<std::uint32_t>& t1_set,
                                     const std::vector<std::uint32_t>& t0_set) {
    Int n = 0;
    for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& b = d.blocks[bi];
        bool ok = true;
        for (auto p : t1_set) ok &= std::binary_search(b.begin(), b.end(), p);
        for (auto p : t0_set) ok &= !std::binary_search(b.begin(), b.end(), p);
        if (ok) n += d.mult[bi];
    }
    return n;
}

Design complement_design(const Design& d) {
    if (!d.declared) throw std::invalid_argument("complement_design: input has no declared parameters");
    const auto [t, k, lambda] = *d.declared;
    if (!(t <= k && k <= d.nu - t))
        throw std::invalid_argument("complement_design: need t <= k <= nu-t");
    Design out;
    out.nu = d.nu;
    std::vector<std::vector<std::uint32_t>> comp;
    for (const auto& b : d.blocks) {
        std::vector<std::uint32_t> c;
        c.reserve(d.nu - b.size());
        size_t j = 0;
        for (std::uint32_t p = 0; p < d.nu; ++p) {
            if (j < b.size() && b[j] == p) {
                ++j;
            } else {
                c.push_back(p);
            }
        }
        comp.push_back(std::move(c));
    }
    // Rebuild in canonical order, then restore the multiset multiplicities
    // (complementation is a bijection on blocks, so the merge is 1:1).
    out.blocks = std::move(comp);
    out.mult = d.mult;
    std::vector<size_t> order(out.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return out.blocks[a] < out.blocks[b]; });
    std::vector<std::vector<std::uint32_t>> sb(order.size());
    std::vector<std::uint64_t> sm(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        sb[i] = std::move(out.blocks[order[i]]);
        sm[i] = out.mult[order[i]];
    }
    out.blocks = std::move(sb);
    out.mult = std::move(sm);

    const Rat lbar(binom(d.nu - t, k) * lambda, binom(d.nu - t, k - t));
    if (!is_integer(lbar))
        throw VerificationError("complement_design: non-integral complementary lambda");
    out.declared = DesignParams{t, d.nu - k, numerator(lbar)};
    return out;
}

Rat promoted_lambda(unsigned nu, unsigned k, const Int& lambda, unsigned t) {
    if (!(1 <= nu - k && nu - k <= t && t <= k))
        throw std::invalid_argument("promoted_lambda: need 1 <= nu-k <= t <= k");
    return Rat(binom(nu - t, nu - k) * lambda, binom(nu - t, k - t));
}

unsigned simplicity_w(std::uint64_t q, unsigned d, unsigned nu) {
    if (d < 1) throw std::invalid_argument("simplicity_w: need d >= 1");
    unsigned best = 0;
    for (unsigned w = 1; w <= nu; ++w) {
        const std::int64_t floor_term = static_cast<std::int64_t>((w + q - 2) / (q - 1));
        if (static_cast<std::int64_t>(w) - floor_term < static_cast<std::int64_t>(d)) best = w;
    }
    return best;
}

}  // namespace cadet::designs
