#include "cadet/predictor.hpp"

#include <map>
#include <stdexcept>

#include "cadet/errors.hpp"

namespace cadet::predictor {

namespace {

Int rat_count(const Rat& v, const std::string& what) {
    if (!is_integer(v) || v < 0)
        throw VerificationError(what + ": non-integral or negative predicted count " +
                                numerator(v).str() + "/" + denominator(v).str());
    return numerator(v);
}

PredictedDistribution from_weight_map(unsigned nu, const std::map<Int, Int>& weights,
                                      std::string provenance, unsigned dim) {
    if (nu > (1u << 26))
        throw std::invalid_argument(provenance + ": length " + std::to_string(nu) +
                                    " is too long to materialize as a dense distribution");
    PredictedDistribution out;
    out.nu = nu;
    out.counts.assign(nu + 1, 0);
    out.provenance = std::move(provenance);
    out.dimension = dim;
    Int min_d = 0;
    for (const auto& [w, c] : weights) {
        if (c == 0) continue;
        if (w < 0 || w > nu)
            throw VerificationError(out.provenance + ": weight " + w.str() + " outside 0..nu");
        if (c < 0) throw VerificationError(out.provenance + ": negative multiplicity");
        out.counts[static_cast<unsigned>(w)] += c;
        if (w > 0 && (min_d == 0 || w < min_d)) min_d = w;
    }
    out.min_distance = static_cast<unsigned>(min_d);
    return out;
}

Int pow2(unsigned e) { return ipow(Int(2), e); }

}  // namespace

Int PredictedDistribution::total() const {
    Int s = 0;
    for (const Int& c : counts) s += c;
    return s;
}

PredictedDistribution shortened_predict(const std::vector<Int>& a, unsigned nu, unsigned t) {
    if (a.size() != nu + 1) throw std::invalid_argument("shortened_predict: need nu+1 counts");
    if (t > nu) throw std::invalid_argument("shortened_predict: t exceeds nu");
    PredictedDistribution out;
    out.nu = nu - t;
    out.provenance = "shortened_predict(t=" + std::to_string(t) + ")";
    out.counts.assign(out.nu + 1, 0);
    out.counts[0] = 1;  // the zero word always survives shortening
    for (unsigned k = 1; k <= out.nu; ++k) {
        if (a[k] == 0) continue;
        const Rat v(binom(k, t) * binom(nu - t, k) * a[k], binom(nu, t) * binom(nu - t, k - t));
        out.counts[k] = rat_count(v, out.provenance);
    }
    if (t == 0) out.counts[0] = a[0];
    return out;
}

PredictedDistribution punctured_predict(const std::vector<Int>& a, unsigned nu, unsigned t) {
    if (a.size() != nu + 1) throw std::invalid_argument("punctured_predict: need nu+1 counts");
    if (t > nu) throw std::invalid_argument("punctured_predict: t exceeds nu");
    PredictedDistribution out;
    out.nu = nu - t;
    out.provenance = "punctured_predict(t=" + std::to_string(t) + ")";
    out.counts.assign(out.nu + 1, 0);
    out.counts[0] = 1;
    for (unsigned k = 1; k <= out.nu; ++k) {
        Rat v = 0;
        for (unsigned i = 0; i <= t; ++i) {
            if (k + i > nu || a[k + i] == 0) continue;
            const Int den = binom(nu - t, k + i - t) * binom(nu, t);
            if (den == 0) continue;
            v += Rat(binom(nu - t, k) * binom(k + i, t) * binom(t, i) * a[k + i], den);
        }
        out.counts[k] = rat_count(v, out.provenance);
    }
    if (t == 0) out.counts[0] = a[0];
    return out;
}

TableFamily table_family_from_name(const std::string& name) {
    static const std::map<std::string, TableFamily> names = {
        {"bent_code", TableFamily::BentCode},       {"bent_short1", TableFamily::BentShort1},
        {"bent_short2", TableFamily::BentShort2},   {"bent_punct1", TableFamily::BentPunct1},
        {"bent_punct2", TableFamily::BentPunct2},   {"vbent_code", TableFamily::VBentCode},
        {"vbent_short1", TableFamily::VBentShort1}, {"vbent_short2", TableFamily::VBentShort2},
        {"vbent_punct1", TableFamily::VBentPunct1}, {"vbent_punct2", TableFamily::VBentPunct2},
        {"two_valued_code", TableFamily::TwoValuedCode},
    };
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown table family: " + name);
    return it->second;
}

std::string table_family_name(TableFamily f) {
    switch (f) {
        case TableFamily::BentCode: return "bent_code";
        case TableFamily::BentShort1: return "bent_short1";
        case TableFamily::BentShort2: return "bent_short2";
        case TableFamily::BentPunct1: return "bent_punct1";
        case TableFamily::BentPunct2: return "bent_punct2";
        case TableFamily::VBentCode: return "vbent_code";
        case TableFamily::VBentShort1: return "vbent_short1";
        case TableFamily::VBentShort2: return "vbent_short2";
        case TableFamily::VBentPunct1: return "vbent_punct1";
        case TableFamily::VBentPunct2: return "vbent_punct2";
        case TableFamily::TwoValuedCode: return "two_valued_code";
    }
    throw std::logic_error("table_family_name: bad enum");
}

PredictedDistribution table_predict(TableFamily family, const TableParams& p) {
    const std::string name = table_family_name(family);

    switch (family) {
        case TableFamily::BentCode:
        case TableFamily::BentShort1:
        case TableFamily::BentShort2:
        case TableFamily::BentPunct1:
        case TableFamily::BentPunct2: {
            const unsigned n = p.n;
            const Int nu_f = p.nu_f;
            if (n < 6 || n % 2) throw std::invalid_argument(name + ": need even n >= 6");
            if (p.nu_f < 4 || p.nu_f % 2)
                throw std::invalid_argument(name + ": nu_f must be an even support size");
            const Int half = nu_f / 2;
            const Int e4 = pow2((n - 4) / 2), e2 = pow2((n - 2) / 2);
            const Int wlo = half - e4, whi = half + e4;
            const Int c = pow2(n) - 1;
            // Multiplicity splitters shared by the whole family.
            const Rat mlo_1(c * (nu_f + e2), 2 * nu_f);        // toward the low weight
            const Rat mhi_1(c * (nu_f - e2), 2 * nu_f);        // toward the high weight
            const Rat mlo_2(c * (nu_f + e2) * (nu_f + e2 - 2), 4 * nu_f * (nu_f - 1));
            const Rat mhi_2(c * (nu_f - e2) * (nu_f - e2 - 2), 4 * nu_f * (nu_f - 1));
            const Rat mmid_2(c * (nu_f * nu_f - pow2(n - 2)), 2 * nu_f * (nu_f - 1));

            std::map<Int, Int> w;
            unsigned nu_out = 0, dim = 0;
            switch (family) {
                case TableFamily::BentCode:
                    nu_out = p.nu_f;
                    dim = n + 1;
                    w[wlo] = c;
                    w[whi] = c;
                    w[nu_f] = 1;
                    break;
                case TableFamily::BentShort1:
                    nu_out = p.nu_f - 1;
                    dim = n;
                    w[wlo] = rat_count(mlo_1, name);
                    w[whi] = rat_count(mhi_1, name);
                    break;
                case TableFamily::BentShort2:
                    nu_out = p.nu_f - 2;
                    dim = n - 1;
                    w[wlo] = rat_count(mlo_2, name);
                    w[whi] = rat_count(mhi_2, name);
                    break;
                case TableFamily::BentPunct1:
                    nu_out = p.nu_f - 1;
                    dim = n + 1;
                    w[wlo - 1] = rat_count(mhi_1, name);
                    w[wlo] = rat_count(mlo_1, name);
                    w[whi - 1] = rat_count(mlo_1, name);
                    w[whi] = rat_count(mhi_1, name);
                    w[nu_f - 1] = 1;
                    break;
                case TableFamily::BentPunct2:
                    nu_out = p.nu_f - 2;
                    dim = n + 1;
                    w[wlo - 2] = rat_count(mhi_2, name);
                    w[wlo - 1] = rat_count(mmid_2, name);
                    w[wlo] = rat_count(mlo_2, name);
                    w[whi - 2] = rat_count(mlo_2, name);
                    w[whi - 1] = rat_count(mmid_2, name);
                    w[whi] = rat_count(mhi_2, name);
                    w[nu_f - 2] = 1;
                    break;
                default: break;
            }
            auto out = from_weight_map(nu_out, w, name, dim);
            out.counts[0] += 1;
            return out;
        }

        case TableFamily::VBentCode:
        case TableFamily::VBentShort1:
        case TableFamily::VBentShort2:
        case TableFamily::VBentPunct1:
        case TableFamily::VBentPunct2: {
            const unsigned m = p.m, l = p.ell;
            if (m < 3) throw std::invalid_argument(name + ": need m >= 3");
            if (m > 13) throw std::invalid_argument(name + ": length 2^(2m) exceeds the dense cap");
            if (l < 1 || l > m) throw std::invalid_argument(name + ": need 1 <= ell <= m");
            const Int nu = pow2(2 * m);
            const Int mid = pow2(2 * m - 1);
            const Int off = pow2(m - 1);
            const Int wlo = mid - off, whi = mid + off;
            const Int lc = pow2(l) - 1;

            std::map<Int, Int> w;
            unsigned nu_out = 0, dim = 0;
            switch (family) {
                case TableFamily::VBentCode:
                    nu_out = static_cast<unsigned>(nu);
                    dim = 2 * m + l + 1;
                    w[wlo] = lc * nu;
                    w[mid] = 2 * (nu - 1);
                    w[whi] = lc * nu;
                    w[nu] = 1;
                    break;
                case TableFamily::VBentShort1:
                    nu_out = static_cast<unsigned>(nu - 1);
                    dim = 2 * m + l;
                    w[wlo] = lc * (mid + off);
                    w[mid] = nu - 1;
                    w[whi] = lc * (mid - off);
                    break;
                case TableFamily::VBentShort2:
                    nu_out = static_cast<unsigned>(nu - 2);
                    dim = 2 * m + l - 1;
                    w[wlo] = lc * pow2(m - 2) * (pow2(m) + 2);
                    w[mid] = mid - 1;
                    w[whi] = lc * pow2(m - 2) * (pow2(m) - 2);
                    break;
                case TableFamily::VBentPunct1:
                    nu_out = static_cast<unsigned>(nu - 1);
                    dim = 2 * m + l + 1;
                    w[wlo - 1] = lc * (mid - off);
                    w[wlo] = lc * (mid + off);
                    w[mid - 1] = nu - 1;
                    w[mid] = nu - 1;
                    w[whi - 1] = lc * (mid + off);
                    w[whi] = lc * (mid - off);
                    // The all-one word punctures to weight nu-1 (2^(2m)-1).
                    w[nu - 1] = 1;
                    break;
                case TableFamily::VBentPunct2:
                    nu_out = static_cast<unsigned>(nu - 2);
                    dim = 2 * m + l + 1;
                    w[wlo - 2] = pow2(m - 2) * lc * (pow2(m) - 2);
                    w[wlo - 1] = mid * lc;
                    w[wlo] = lc * pow2(m - 2) * (pow2(m) + 2);
                    w[mid - 2] = mid - 1;
                    w[mid - 1] = nu;
                    w[mid] = mid - 1;
                    w[whi - 2] = pow2(m - 2) * lc * (pow2(m) + 2);
                    w[whi - 1] = mid * lc;
                    w[whi] = lc * pow2(m - 2) * (pow2(m) - 2);
                    // The all-one word punctures to weight nu-2 (2^(2m)-2).
                    w[nu - 2] = 1;
                    break;
                default: break;
            }
            auto out = from_weight_map(nu_out, w, name, dim);
            out.counts[0] += 1;
            return out;
        }

        case TableFamily::TwoValuedCode: {
            const unsigned n = p.n, s = p.s;
            if (n < 2 || n > 26) throw std::invalid_argument(name + ": need 2 <= n <= 26");
            if (s < 1 || s > n - 1) throw std::invalid_argument(name + ": need 1 <= s <= n-1");
            if ((n + s) % 2) throw std::invalid_argument(name + ": need n + s even");
            const Int mid = pow2(n - 1);
            const Int off = pow2((n + s - 2) / 2);
            std::map<Int, Int> w;
            w[mid - off] = pow2(n - s) * (pow2(n) - 1);
            w[mid] = (pow2(n) - 1) * (pow2(n + 1) - pow2(n - s + 1) + 2);
            w[mid + off] = pow2(n - s) * (pow2(n) - 1);
            w[pow2(n)] = 1;
            auto out = from_weight_map(1u << n, w, name, 2 * n + 1);
            out.counts[0] += 1;
            return out;
        }
    }
    throw std::logic_error("table_predict: bad enum");
}

Int design_count_from_lambda(unsigned nu, unsigned k, const Int& lambda_k, unsigned t,
                             std::uint64_t q) {
    if (t > k || k > nu) throw std::invalid_argument("design_count_from_lambda: need t <= k <= nu");
    const Rat v(binom(nu - t, k) * Int(q - 1) * lambda_k, binom(nu - t, k - t));
    return rat_count(v, "design_count_from_lambda");
}

Int dual_punctured_count(const std::vector<Int>& lambda_dual, unsigned nu, unsigned t, unsigned k,
                         std::uint64_t q) {
    if (lambda_dual.size() < k + t + 1)
        throw std::invalid_argument("dual_punctured_count: need lambdas up to index k+t");
    Rat v = 0;
    for (unsigned i = 0; i <= t; ++i) {
        if (lambda_dual[k + i] == 0) continue;
        const Int den = binom(nu - t, k - t + i);
        if (den == 0)
            throw std::invalid_argument("dual_punctured_count: vanishing intersection denominator");
        v += Rat(binom(t, i) * binom(nu - t, k) * lambda_dual[k + i], den);
    }
    v *= Int(q - 1);
    return rat_count(v, "dual_punctured_count");
}

std::array<KLambda, 3> two_valued_design_lambdas(unsigned n, unsigned s) {
    if (s < 1 || s > n - 1) throw std::invalid_argument("two_valued_design_lambdas: need 1 <= s <= n-1");
    if ((n + s) % 2)
        throw std::invalid_argument("two_valued_design_lambdas: need n + s even for integral exponents");
    const Int mid = pow2(n - 1);
    const Int off = pow2((n + s - 2) / 2);
    const Int moff = pow2((n - s - 2) / 2);
    std::array<KLambda, 3> out;
    out[0].k = mid - off;
    out[0].lambda = (pow2(n - s - 1) - moff) * (mid - off - 1);
    out[1].k = mid;
    out[1].lambda = (mid - 1) * (pow2(n) - pow2(n - s) + 1);
    out[2].k = mid + off;
    out[2].lambda = (pow2(n - s - 1) + moff) * (mid + off - 1);
    return out;
}

}  // namespace cadet::predictor
