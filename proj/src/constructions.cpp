#include "cadet/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cadet/errors.hpp"

namespace cadet::constructions {

namespace {

using boolfn::VectorialFunction;
using code::LinearCode;

bool counts_match(const code::WeightDistribution& a, const predictor::PredictedDistribution& p) {
    return a.nu == p.nu && a.counts == p.counts;
}

std::vector<std::uint32_t> iota_labels(std::uint32_t count) {
    std::vector<std::uint32_t> v(count);
    for (std::uint32_t i = 0; i < count; ++i) v[i] = i;
    return v;
}

}  // namespace

ConstructionReport code_from_bent_support(const VectorialFunction& f, std::uint64_t budget) {
    if (f.l() != 1) throw std::invalid_argument("code_from_bent_support: needs a Boolean function");
    const auto& field = f.input_field();
    const unsigned n = f.n();

    std::vector<std::uint32_t> support;
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        if (f.table()[x]) support.push_back(x);
    if (support.empty()) throw std::invalid_argument("code_from_bent_support: empty support");
    const auto nu_f = static_cast<unsigned>(support.size());

    const auto tr1 = field->trace_table(1);
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned j = 0; j < n; ++j) {
        const std::uint32_t basis = field->pow(field->generator(), j);
        std::vector<std::uint32_t> row(nu_f);
        for (unsigned pos = 0; pos < nu_f; ++pos) row[pos] = tr1[field->mul(basis, support[pos])];
        rows.push_back(std::move(row));
    }
    rows.emplace_back(nu_f, 1);  // the y = 1 shift

    ConstructionReport rep{LinearCode::from_rows(gf::FieldTable::make(2, 1), rows),
                           std::move(support), {}, {}, false, false, ""};
    rep.enumerated = rep.code.weight_distribution(budget);
    rep.predicate_holds = f.is_bent();
    if (n >= 6 && n % 2 == 0) {
        predictor::TableParams tp;
        tp.n = n;
        tp.nu_f = nu_f;
        rep.predicted = predictor::table_predict(predictor::TableFamily::BentCode, tp);
        rep.match = counts_match(rep.enumerated, *rep.predicted);
        if (!rep.predicate_holds)
            rep.note = "source function is not bent; the attached table does not apply";
    } else {
        rep.note = "no table attached (needs even n >= 6)";
    }
    return rep;
}

ConstructionReport code_from_vectorial(const VectorialFunction& f, std::uint64_t budget) {
    const unsigned n = f.n(), l = f.l();
    const auto& in = f.input_field();
    const auto& out = f.output_field();
    const std::uint32_t size = 1u << n;

    const auto tr1_in = in->trace_table(1);
    const auto tr1_out = out->trace_table(1);
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned j = 0; j < l; ++j) {
        const std::uint32_t a = out->pow(out->generator(), j);
        std::vector<std::uint32_t> row(size);
        for (std::uint32_t x = 0; x < size; ++x) row[x] = tr1_out[out->mul(a, f.table()[x])];
        rows.push_back(std::move(row));
    }
    for (unsigned j = 0; j < n; ++j) {
        const std::uint32_t b = in->pow(in->generator(), j);
        std::vector<std::uint32_t> row(size);
        for (std::uint32_t x = 0; x < size; ++x) row[x] = tr1_in[in->mul(b, x)];
        rows.push_back(std::move(row));
    }
    rows.emplace_back(size, 1);

    ConstructionReport rep{LinearCode::from_rows(gf::FieldTable::make(2, 1), rows),
                           iota_labels(size), {}, {}, false, false, ""};
    rep.enumerated = rep.code.weight_distribution(budget);

    if (l == n) {
        // Two-valued closed form, when the spectra cooperate and fit budget.
        std::optional<unsigned> s;
        if (n <= boolfn::kDefaultMaxN) s = f.two_valued_s();
        if (s && *s >= 1 && *s <= n - 1 && (n + *s) % 2 == 0) {
            const std::int64_t big = 1ll << ((n + *s) / 2);
            bool walsh_ok = true;
            for (std::int64_t w : f.walsh_value_set()) walsh_ok &= w == 0 || w == big || w == -big;
            if (walsh_ok) {
                predictor::TableParams tp;
                tp.n = n;
                tp.s = *s;
                rep.predicted = predictor::table_predict(predictor::TableFamily::TwoValuedCode, tp);
                rep.predicate_holds = true;
                rep.match = counts_match(rep.enumerated, *rep.predicted);
                return rep;
            }
        }
        rep.note = "no closed form attached (function is not two-valued with a three-valued spectrum)";
        return rep;
    }

    if (n % 2 == 0 && n / 2 >= 3 && f.is_bent_vectorial()) {
        predictor::TableParams tp;
        tp.m = n / 2;
        tp.ell = l;
        rep.predicted = predictor::table_predict(predictor::TableFamily::VBentCode, tp);
        rep.predicate_holds = true;
        rep.match = counts_match(rep.enumerated, *rep.predicted);
    } else {
        rep.note = "no table attached (function is not bent vectorial)";
    }
    return rep;
}

code::LinearCode rm1(unsigned n) {
    if (n < 2) throw std::invalid_argument("rm1: need n >= 2");
    auto field = gf::FieldTable::make(2, n);
    const std::uint32_t size = 1u << n;
    const auto tr1 = field->trace_table(1);
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned j = 0; j < n; ++j) {
        const std::uint32_t b = field->pow(field->generator(), j);
        std::vector<std::uint32_t> row(size);
        for (std::uint32_t x = 0; x < size; ++x) row[x] = tr1[field->mul(b, x)];
        rows.push_back(std::move(row));
    }
    rows.emplace_back(size, 1);
    return LinearCode::from_rows(gf::FieldTable::make(2, 1), rows);
}

ConstructionReport ternary_code(unsigned m, std::uint64_t budget) {
    if (m % 2 == 0) throw std::invalid_argument("ternary_code: m must be odd");
    if (m < 3) throw std::invalid_argument("ternary_code: need m >= 3");
    auto big = gf::FieldTable::make(3, m);
    auto gf3 = gf::FieldTable::make(3, 1);
    const std::uint64_t half = (big->q() - 1) / 2;

    const auto tr1 = big->trace_table(1);
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned j = 0; j < m; ++j) {
        std::vector<std::uint32_t> row(half);
        for (std::uint64_t i = 0; i < half; ++i)
            row[i] = tr1[big->mul(big->alpha_pow(j), big->alpha_pow(4 * i))];
        rows.push_back(std::move(row));
    }
    for (unsigned j = 0; j < m; ++j) {
        std::vector<std::uint32_t> row(half);
        for (std::uint64_t i = 0; i < half; ++i)
            row[i] = tr1[big->mul(big->alpha_pow(j), big->alpha_pow(2 * i))];
        rows.push_back(std::move(row));
    }

    ConstructionReport rep{LinearCode::from_rows(gf3, rows),
                           iota_labels(static_cast<std::uint32_t>(half)),
                           {},
                           std::nullopt,
                           true,
                           false,
                           ""};
    rep.enumerated = rep.code.weight_distribution(budget);

    // Expected shape: [(3^m-1)/2, 2m, 3^(m-1) - 3^((m-1)/2)] with nonzero
    // weights confined to {3^(m-1), 3^(m-1) +- 3^((m-1)/2)}.
    std::uint64_t p1 = 1, p2 = 1;
    for (unsigned i = 0; i + 1 < m; ++i) p1 *= 3;
    for (unsigned i = 0; i < (m - 1) / 2; ++i) p2 *= 3;
    bool ok = rep.code.dimension() == 2 * m &&
              rep.enumerated.min_positive_weight() == p1 - p2;
    for (unsigned w = 1; w <= rep.enumerated.nu && ok; ++w)
        if (rep.enumerated.counts[w] != 0) ok &= w == p1 || w == p1 - p2 || w == p1 + p2;
    rep.match = ok;
    if (!ok) rep.note = "parameters disagree with the trace-code closed form";
    return rep;
}

designs::Design steiner_from_function(const VectorialFunction& f, unsigned max_n) {
    const unsigned n = f.n();
    if (n > max_n)
        throw BudgetError("steiner_from_function: n exceeds the budget cap n <= " +
                          std::to_string(max_n));
    const std::uint32_t size = 1u << n;
    const auto& table = f.table();

    // Pack a sorted 4-set into 4 x 16 bits for cheap dedup.
    std::vector<std::uint64_t> packed;
    std::vector<std::vector<std::uint32_t>> bucket(size_t{1} << f.l());
    for (std::uint32_t a = 1; a < size; ++a) {
        for (auto& b : bucket) b.clear();
        for (std::uint32_t x = 0; x < size; ++x)
            if (x < (x ^ a)) bucket[table[x] ^ table[x ^ a]].push_back(x);
        for (const auto& b : bucket) {
            for (size_t i = 0; i + 1 < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j) {
                    std::uint32_t pts[4] = {b[i], b[i] ^ a, b[j], b[j] ^ a};
                    std::sort(pts, pts + 4);
                    packed.push_back((std::uint64_t{pts[0]} << 48) | (std::uint64_t{pts[1]} << 32) |
                                     (std::uint64_t{pts[2]} << 16) | pts[3]);
                }
            if (packed.size() > (1ull << 28))
                throw BudgetError("steiner_from_function: block multiset exceeds the memory budget");
        }
    }
    std::sort(packed.begin(), packed.end());

    designs::Design d;
    d.nu = size;
    for (size_t i = 0; i < packed.size();) {
        size_t j = i;
        while (j < packed.size() && packed[j] == packed[i]) ++j;
        // Every weight-4 dual support arises from exactly its 3 pairings.
        if (j - i != 3)
            throw VerificationError("steiner_from_function: block multiplicity " +
                                    std::to_string(j - i) + " != 3");
        const std::uint64_t v = packed[i];
        d.blocks.push_back({static_cast<std::uint32_t>(v >> 48),
                            static_cast<std::uint32_t>(v >> 32 & 0xffff),
                            static_cast<std::uint32_t>(v >> 16 & 0xffff),
                            static_cast<std::uint32_t>(v & 0xffff)});
        d.mult.push_back(1);
        i = j;
    }
    return d;
}

Rat pair_lambda(const VectorialFunction& f, std::uint32_t x1, std::uint32_t x2) {
    if (x1 == x2) throw std::invalid_argument("pair_lambda: points must differ");
    const std::uint32_t a = x1 ^ x2;
    const std::uint32_t b = f.table()[x1] ^ f.table()[x2];
    unsigned delta = 0;
    for (std::uint32_t x = 0; x < (1u << f.n()); ++x)
        delta += (f.table()[x] ^ f.table()[x ^ a]) == b;
    return Rat(static_cast<int>(delta) - 2, 2);
}

}  // namespace cadet::constructions
