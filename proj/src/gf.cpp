#include "cadet/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cadet::gf {

namespace {

// Default moduli, one per supported (p, m): the lexicographically smallest
// primitive monic polynomial by coefficient code, except (2,6) which is
// pinned to u^6+u^4+u^3+u+1 so that GF(2^6) computations reproduce the
// standard worked examples bit for bit. Encoded as sum c_i p^i.
struct DefaultPoly {
    unsigned p, m;
    std::uint64_t code;
};
constexpr DefaultPoly kDefaultModuli[] = {
    {2, 1, 3ull},        {2, 2, 7ull},        {2, 3, 11ull},       {2, 4, 19ull},
    {2, 5, 37ull},       {2, 6, 91ull},       {2, 7, 131ull},      {2, 8, 285ull},
    {2, 9, 529ull},      {2, 10, 1033ull},    {2, 11, 2053ull},    {2, 12, 4179ull},
    {2, 13, 8219ull},    {2, 14, 16427ull},   {2, 15, 32771ull},   {2, 16, 65581ull},
    {2, 17, 131081ull},  {2, 18, 262183ull},  {2, 19, 524327ull},  {2, 20, 1048585ull},
    {3, 1, 4ull},        {3, 2, 14ull},       {3, 3, 34ull},       {3, 4, 86ull},
    {3, 5, 250ull},      {3, 6, 734ull},      {3, 7, 2203ull},     {3, 8, 6590ull},
    {3, 9, 19747ull},    {3, 10, 59081ull},   {3, 11, 177163ull},  {3, 12, 531656ull},
    {3, 13, 1594330ull}, {3, 14, 4782974ull}, {3, 15, 14348923ull},
    {5, 1, 7ull},        {5, 2, 32ull},       {5, 3, 142ull},      {5, 4, 662ull},
    {5, 5, 3147ull},     {5, 6, 15632ull},    {5, 7, 78142ull},    {5, 8, 390663ull},
    {5, 9, 1953163ull},  {5, 10, 9765658ull},
    {7, 1, 9ull},        {7, 2, 59ull},       {7, 3, 366ull},      {7, 4, 2476ull},
    {7, 5, 16818ull},    {7, 6, 117808ull},   {7, 7, 823587ull},   {7, 8, 5764811ull},
};

std::vector<unsigned> decode_poly(std::uint64_t code, unsigned p, unsigned m) {
    // -> most-significant-first coefficient list of length m+1
    std::vector<unsigned> c(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        c[m - i] = static_cast<unsigned>(code % p);
        code /= p;
    }
    return c;
}

// Dense little-endian polynomial arithmetic over GF(p), used only at
// construction time (irreducibility / primitivity checks).
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& mod, unsigned p) {
    // mod is monic little-endian
    const int m = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= m; --i) {
        unsigned c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (int j = 0; j < m; ++j)
            a[i - m + j] = (a[i - m + j] + p * p - c * mod[j] % p) % p;
    }
    return trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), mod, p);
}

bool is_irreducible(const Poly& mod_le, unsigned p) {
    // Trial division by all monic polynomials of degree <= m/2.
    const unsigned m = static_cast<unsigned>(mod_le.size()) - 1;
    if (m == 1) return true;
    std::uint64_t pd = 1;
    for (unsigned d = 1; 2 * d <= m; ++d) {
        pd *= p;  // p^d candidate lower-coefficient codes
        for (std::uint64_t lo = 0; lo < pd; ++lo) {
            Poly div(d + 1);
            std::uint64_t c = lo;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            div[d] = 1;
            // Remainder of mod_le / div: reuse poly_mod with div as modulus.
            if (poly_mod(mod_le, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr FieldTable::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus,
                          std::optional<std::uint32_t> generator) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("field_new: p must be one of 2, 3, 5, 7");
    if (m < 1 || m > 20) throw std::invalid_argument("field_new: need 1 <= m <= 20");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 24)) throw std::invalid_argument("field_new: p^m exceeds the 2^24 size cap");
    }

    std::vector<unsigned> mod_msf;
    bool default_mod = !modulus.has_value();
    if (default_mod) {
        for (const auto& e : kDefaultModuli)
            if (e.p == p && e.m == m) mod_msf = decode_poly(e.code, p, m);
        if (mod_msf.empty()) throw std::invalid_argument("field_new: no default modulus for (p, m)");
    } else {
        mod_msf = *modulus;
        if (mod_msf.size() != m + 1 || mod_msf[0] != 1)
            throw std::invalid_argument("field_new: modulus must be monic of degree m");
        for (unsigned c : mod_msf)
            if (c >= p) throw std::invalid_argument("field_new: modulus coefficient out of range");
    }

    Poly mod_le(mod_msf.rbegin(), mod_msf.rend());
    if (!is_irreducible(mod_le, p)) throw std::invalid_argument("field_new: modulus is reducible over GF(p)");

    auto f = std::shared_ptr<FieldTable>(new FieldTable());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;
    f->modulus_ = mod_msf;

    // Pick the generator: residue class of u by default (code p), which for
    // m = 1 is the residue of u mod (u - g), i.e. the shipped primitive root.
    std::uint32_t g;
    if (generator) {
        g = *generator;
        if (g == 0 || g >= q) throw std::invalid_argument("field_new: generator code out of range");
    } else if (m == 1) {
        g = (p - mod_msf[1]) % p;  // root of u + c_0
    } else {
        g = p;  // the polynomial variable u
    }

    // Fill antilog by repeated multiplication by g in the polynomial
    // representation, then invert into log. This exhaustively certifies
    // ord(g) = q - 1: a shorter order revisits 1 early and leaves holes.
    f->antilog_.assign(q - 1, 0);
    f->log_.assign(q, 0);
    std::vector<char> seen(q, 0);
    Poly gp;
    {
        std::uint32_t c = g;
        while (c) {
            gp.push_back(c % p);
            c /= p;
        }
    }
    Poly cur = {1};
    for (std::uint64_t e = 0; e < q - 1; ++e) {
        std::uint32_t code = 0, mult = 1;
        for (unsigned d = 0; d < cur.size(); ++d) {
            code += cur[d] * mult;
            mult *= p;
        }
        if (seen[code]) {
            if (default_mod)
                throw std::logic_error("field_new: shipped default modulus is not primitive");
            throw std::invalid_argument(
                "field_new: modulus is not primitive and the supplied generator has order < p^m-1; "
                "pass an explicit generator of full order");
        }
        seen[code] = 1;
        f->antilog_[e] = code;
        f->log_[code] = static_cast<std::uint32_t>(e);
        cur = poly_mulmod(cur, gp, mod_le, p);
    }
    f->generator_ = g;
    return f;
}

FieldPtr FieldTable::parse(const std::string& spec) {
    std::istringstream in(spec);
    unsigned p, m;
    if (!(in >> p >> m)) throw std::invalid_argument("field spec: expected 'p m [c_m ... c_0]'");
    std::vector<unsigned> coeffs;
    unsigned c;
    while (in >> c) coeffs.push_back(c);
    if (coeffs.empty()) return make(p, m);
    return make(p, m, coeffs);
}

std::string FieldTable::spec_string() const {
    std::ostringstream out;
    out << p_ << ' ' << m_;
    for (unsigned c : modulus_) out << ' ' << c;
    return out.str();
}

std::uint32_t FieldTable::add(std::uint32_t x, std::uint32_t y) const {
    if (p_ == 2) return x ^ y;
    std::uint32_t r = 0, mult = 1;
    while (x || y) {
        r += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t FieldTable::neg(std::uint32_t x) const {
    if (p_ == 2) return x;
    std::uint32_t r = 0, mult = 1;
    while (x) {
        r += (p_ - x % p_) % p_ * mult;
        x /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t FieldTable::inv(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("inv: zero has no inverse");
    return antilog_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

std::uint32_t FieldTable::pow(std::uint32_t x, long long e) const {
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("pow: negative power of zero");
        return 0;
    }
    const long long ord = static_cast<long long>(q_ - 1);
    long long le = ((e % ord) * (log_[x] % ord)) % ord;
    if (le < 0) le += ord;
    return antilog_[le];
}

std::uint32_t FieldTable::frobenius(std::uint32_t x, unsigned k) const {
    if (x == 0) return 0;
    std::uint64_t e = log_[x];
    for (unsigned i = 0; i < k; ++i) e = e * p_ % (q_ - 1);
    return antilog_[e];
}

std::uint32_t FieldTable::log(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("log: zero");
    return log_[x];
}

std::uint32_t FieldTable::trace(std::uint32_t x, unsigned d) const {
    if (d == 0 || m_ % d != 0) throw std::invalid_argument("trace: target degree must divide m");
    std::uint32_t acc = 0;
    std::uint32_t term = x;
    for (unsigned i = 0; i < m_ / d; ++i) {
        acc = add(acc, term);
        term = frobenius(term, d);
    }
    return acc;
}

std::vector<std::uint32_t> FieldTable::trace_table(unsigned d) const {
    std::vector<std::uint32_t> t(q_);
    for (std::uint64_t x = 0; x < q_; ++x) t[x] = trace(static_cast<std::uint32_t>(x), d);
    return t;
}

std::vector<std::uint32_t> FieldTable::subfield(unsigned d) const {
    if (d == 0 || m_ % d != 0) throw std::invalid_argument("subfield: degree must divide m");
    std::vector<std::uint32_t> s;
    for (std::uint64_t x = 0; x < q_; ++x) {
        auto xc = static_cast<std::uint32_t>(x);
        if (frobenius(xc, d) == xc) s.push_back(xc);
    }
    return s;  // ascending by construction
}

namespace {
const FieldTable& common_field(FieldElement a, FieldElement b) {
    if (a.field == nullptr || a.field != b.field)
        throw std::invalid_argument("field elements belong to different fields");
    return *a.field;
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    const auto& f = common_field(a, b);
    return {f.add(a.code, b.code), f};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    const auto& f = common_field(a, b);
    return {f.mul(a.code, b.code), f};
}

FieldElement FieldElement::inverse() const { return {field->inv(code), *field}; }

FieldElement FieldElement::pow(long long e) const { return {field->pow(code, e), *field}; }

}  // namespace cadet::gf
