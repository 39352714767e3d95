#include "cadet/boolfn.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cadet/errors.hpp"

namespace cadet::boolfn {

namespace {

// sum_x v[x] (-1)^(u.x) for all bit masks u, in place.
void fwht(std::vector<std::int64_t>& v) {
    const size_t n = v.size();
    for (size_t len = 1; len < n; len <<= 1)
        for (size_t i = 0; i < n; i += len << 1)
            for (size_t j = i; j < i + len; ++j) {
                const std::int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
}

Int int_from_u128(unsigned __int128 v) {
    Int r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

}  // namespace

VectorialFunction VectorialFunction::from_table(unsigned n, unsigned l,
                                                std::vector<std::uint32_t> table) {
    if (l < 1 || l > n) throw std::invalid_argument("from_table: need 1 <= l <= n");
    if (table.size() != (size_t{1} << n))
        throw std::invalid_argument("from_table: table must have 2^n entries");
    for (auto v : table)
        if (v >> l) throw std::invalid_argument("from_table: output code exceeds 2^l");
    VectorialFunction f;
    f.n_ = n;
    f.l_ = l;
    f.in_field_ = gf::FieldTable::make(2, n);
    f.out_field_ = l == n ? f.in_field_ : gf::FieldTable::make(2, l);
    f.table_ = std::move(table);
    auto tin = f.in_field_->trace_table(1);
    f.tr1_in_.assign(tin.begin(), tin.end());
    auto tout = f.out_field_->trace_table(1);
    f.tr1_out_.assign(tout.begin(), tout.end());
    return f;
}

VectorialFunction VectorialFunction::from_exponent(unsigned n, std::uint64_t e) {
    return from_exponent(gf::FieldTable::make(2, n), e);
}

VectorialFunction VectorialFunction::from_exponent(gf::FieldPtr field, std::uint64_t e) {
    if (!field || field->p() != 2) throw std::invalid_argument("from_exponent: need a GF(2^n) field");
    const unsigned n = field->m();
    VectorialFunction f;
    f.n_ = n;
    f.l_ = n;
    f.in_field_ = field;
    f.out_field_ = field;
    f.table_.resize(size_t{1} << n);
    f.table_[0] = e == 0 ? 1 : 0;
    const auto reduced = static_cast<long long>(e % (field->q() - 1));
    for (std::uint64_t x = 1; x < (1ull << n); ++x)
        f.table_[x] = field->pow(static_cast<std::uint32_t>(x), reduced);
    auto t = field->trace_table(1);
    f.tr1_in_.assign(t.begin(), t.end());
    f.tr1_out_ = f.tr1_in_;
    return f;
}

VectorialFunction VectorialFunction::scaled(std::uint32_t c) const {
    VectorialFunction f = *this;
    for (auto& v : f.table_) v = out_field_->mul(c, v);
    return f;
}

VectorialFunction VectorialFunction::plus(const VectorialFunction& g) const {
    if (n_ != g.n_ || l_ != g.l_) throw std::invalid_argument("plus: mismatched degrees");
    VectorialFunction f = *this;
    for (size_t x = 0; x < table_.size(); ++x) f.table_[x] ^= g.table_[x];
    return f;
}

VectorialFunction VectorialFunction::plus_linear(std::uint32_t b) const {
    if (l_ != n_) throw std::invalid_argument("plus_linear: needs l == n");
    VectorialFunction f = *this;
    for (size_t x = 0; x < table_.size(); ++x)
        f.table_[x] ^= in_field_->mul(b, static_cast<std::uint32_t>(x));
    return f;
}

VectorialFunction VectorialFunction::traced_to(unsigned d) const {
    if (d == 0 || l_ % d != 0) throw std::invalid_argument("traced_to: target degree must divide l");
    // Embed the standalone GF(2^d) into the current output field: z is the
    // smallest subfield element that is a root of the standalone modulus,
    // and beta^k -> z^k extends to a field isomorphism onto the subfield.
    auto target = d == in_field_->m() ? in_field_ : gf::FieldTable::make(2, d);
    const auto& mod = target->modulus();  // most-significant-first over GF(2)
    std::uint32_t z = 0;
    bool found = false;
    for (std::uint32_t cand : out_field_->subfield(d)) {
        std::uint32_t acc = 0;
        for (unsigned c : mod) acc = out_field_->add(out_field_->mul(acc, cand), c);
        if (acc == 0 && cand != 0) {
            z = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("traced_to: no embedding root found");
    std::vector<std::uint32_t> decode(out_field_->q(), 0);
    std::vector<char> in_subfield(out_field_->q(), 0);
    decode[0] = 0;
    in_subfield[0] = 1;
    for (std::uint64_t k = 0; k + 1 < (1ull << d); ++k) {
        const std::uint32_t img = out_field_->pow(z, static_cast<long long>(k));
        decode[img] = target->alpha_pow(k);
        in_subfield[img] = 1;
    }

    VectorialFunction f;
    f.n_ = n_;
    f.l_ = d;
    f.in_field_ = in_field_;
    f.out_field_ = target;
    f.table_.resize(table_.size());
    for (size_t x = 0; x < table_.size(); ++x) {
        const std::uint32_t t = out_field_->trace(table_[x], d);
        if (!in_subfield[t]) throw std::logic_error("traced_to: trace left the subfield");
        f.table_[x] = decode[t];
    }
    f.tr1_in_ = tr1_in_;
    auto tout = target->trace_table(1);
    f.tr1_out_.assign(tout.begin(), tout.end());
    return f;
}

std::int64_t VectorialFunction::walsh_direct(std::uint32_t lambda, std::uint32_t mu) const {
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < (1u << n_); ++x) {
        const unsigned bit = tr1_out_[out_field_->mul(lambda, table_[x])] ^
                             tr1_in_[in_field_->mul(mu, x)];
        s += bit ? -1 : 1;
    }
    return s;
}

std::vector<std::int64_t> VectorialFunction::walsh_row(std::uint32_t lambda) const {
    const size_t size = size_t{1} << n_;
    std::vector<std::int64_t> v(size);
    for (size_t x = 0; x < size; ++x)
        v[x] = tr1_out_[out_field_->mul(lambda, table_[x])] ? -1 : 1;
    fwht(v);
    // The transform indexes coefficients by the bit mask u with
    // Tr(mu x) = u.x; remap to element codes via mask(mu)_k = Tr(mu u^k).
    std::vector<std::uint32_t> basis_mask(n_);
    for (unsigned k = 0; k < n_; ++k) basis_mask[k] = 1u << k;
    std::vector<std::int64_t> out(size);
    for (std::uint32_t mu = 0; mu < size; ++mu) {
        std::uint32_t mask = 0;
        for (unsigned k = 0; k < n_; ++k)
            mask |= static_cast<std::uint32_t>(tr1_in_[in_field_->mul(mu, basis_mask[k])]) << k;
        out[mu] = v[mask];
    }
    return out;
}

std::set<std::int64_t> VectorialFunction::walsh_value_set() const {
    std::set<std::int64_t> vals;
    const size_t size = size_t{1} << n_;
    for (std::uint32_t lambda = 1; lambda < (1u << l_); ++lambda) {
        std::vector<std::int64_t> v(size);
        for (size_t x = 0; x < size; ++x)
            v[x] = tr1_out_[out_field_->mul(lambda, table_[x])] ? -1 : 1;
        fwht(v);  // the value multiset needs no mu reindexing
        vals.insert(v.begin(), v.end());
    }
    return vals;
}

bool VectorialFunction::is_bent() const {
    if (l_ != 1) throw std::invalid_argument("is_bent: expects a Boolean function (l == 1)");
    if (n_ % 2) return false;  // +-2^(n/2) is not an integer otherwise
    const std::int64_t target = 1ll << n_;
    for (std::int64_t w : walsh_row(1))
        if (w * w != target) return false;
    return true;
}

bool VectorialFunction::is_bent_vectorial() const {
    if (n_ % 2) return false;
    const std::int64_t target = 1ll << n_;
    const size_t size = size_t{1} << n_;
    for (std::uint32_t lambda = 1; lambda < (1u << l_); ++lambda) {
        std::vector<std::int64_t> v(size);
        for (size_t x = 0; x < size; ++x)
            v[x] = tr1_out_[out_field_->mul(lambda, table_[x])] ? -1 : 1;
        fwht(v);
        for (std::int64_t w : v)
            if (w * w != target) return false;
    }
    return true;
}

DifferentialSpectrum VectorialFunction::diff_spectrum(unsigned max_n) const {
    if (n_ > max_n)
        throw BudgetError("diff_spectrum: n = " + std::to_string(n_) +
                          " exceeds the budget cap n <= " + std::to_string(max_n));
    DifferentialSpectrum sp;
    sp.n = n_;
    sp.l = l_;
    const std::uint32_t size = 1u << n_;
    const std::uint32_t osize = 1u << l_;
    sp.table.assign((size_t{size} - 1) * osize, 0);
    for (std::uint32_t a = 1; a < size; ++a) {
        std::uint16_t* row = &sp.table[(size_t{a} - 1) * osize];
        for (std::uint32_t x = 0; x < size; ++x) row[table_[x] ^ table_[x ^ a]]++;
        for (std::uint32_t b = 0; b < osize; ++b) {
            sp.histogram[row[b]]++;
            sp.delta = std::max<unsigned>(sp.delta, row[b]);
        }
    }
    return sp;
}

std::optional<unsigned> VectorialFunction::two_valued_s(unsigned max_n) const {
    const auto sp = diff_spectrum(max_n);
    if (sp.histogram.size() != 2) return std::nullopt;
    auto it = sp.histogram.begin();
    if (it->first != 0) return std::nullopt;
    const unsigned v = std::next(it)->first;
    if (v == 0 || (v & (v - 1))) return std::nullopt;  // not a power of two
    unsigned s = 0;
    while (!(v >> s & 1)) ++s;
    return s;
}

Int VectorialFunction::fourth_moment() const {
    if (l_ != n_) throw std::invalid_argument("fourth_moment: needs l == n");
    const size_t size = size_t{1} << n_;
    Int total = 0;
    for (std::uint32_t lambda = 1; lambda < size; ++lambda) {
        std::vector<std::int64_t> v(size);
        for (size_t x = 0; x < size; ++x)
            v[x] = tr1_out_[out_field_->mul(lambda, table_[x])] ? -1 : 1;
        fwht(v);
        unsigned __int128 row = 0;
        for (std::int64_t w : v) {
            const unsigned __int128 w2 = static_cast<unsigned __int128>(w * w);
            row += w2 * w2;
        }
        total += int_from_u128(row);
    }
    return total;
}

bool VectorialFunction::fourth_moment_design_check(unsigned max_n) const {
    // sum W^4 over lambda != 0 equals 2^(2n) sum_(a!=0,b) delta(a,b)^2, and
    // sum delta^2 <= delta sum delta = delta 2^n (2^n - 1) with equality
    // exactly when every delta(a,b) lies in {0, delta}. Hence the moment
    // meets 2^(3n) (2^n - 1) delta iff the function is differentially
    // two-valued.
    const auto sp = diff_spectrum(max_n);
    const Int rhs = ipow(Int(2), 3 * n_) * (ipow(Int(2), n_) - 1) * sp.delta;
    return fourth_moment() == rhs;
}

std::string VectorialFunction::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << l_ << '\n' << std::hex;
    for (size_t x = 0; x < table_.size(); ++x) out << table_[x] << ((x + 1) % 16 ? ' ' : '\n');
    std::string s = out.str();
    if (s.back() != '\n') s += '\n';
    return s;
}

VectorialFunction VectorialFunction::from_text(const std::string& text) {
    std::istringstream in(text);
    unsigned n, l;
    if (!(in >> n >> l)) throw std::invalid_argument("function file: bad header, expected 'n l'");
    if (n < 1 || n > 24) throw std::invalid_argument("function file: n out of range");
    std::vector<std::uint32_t> table(size_t{1} << n);
    in >> std::hex;
    for (auto& v : table)
        if (!(in >> v)) throw std::invalid_argument("function file: truncated table");
    return from_table(n, l, std::move(table));
}

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

}  // namespace

FamilyFunction kasami(unsigned n, unsigned i) {
    require(i >= 1 && n >= 2, "kasami: need n >= 2 and i >= 1");
    require(n != 3 * i, "kasami: inadmissible, n = 3i");
    const unsigned s = std::gcd(n, i);
    require((n / s) % 2 == 1, "kasami: inadmissible, n/gcd(n,i) is even");
    const std::uint64_t e = (1ull << (2 * i)) - (1ull << i) + 1;
    return {VectorialFunction::from_exponent(n, e), s, e};
}

FamilyFunction gold(unsigned n, unsigned i) {
    require(i >= 1 && n >= 2, "gold: need n >= 2 and i >= 1");
    const unsigned s = std::gcd(n, i);
    require((n / s) % 2 == 1, "gold: inadmissible, n/gcd(n,i) is even");
    const std::uint64_t e = (1ull << i) + 1;
    return {VectorialFunction::from_exponent(n, e), s, e};
}

FamilyFunction bracken_tan_tan(unsigned m, unsigned i) {
    require(m >= 1 && i >= 1, "bracken_tan_tan: need m, i >= 1");
    require(m % 3 != 0, "bracken_tan_tan: inadmissible, 3 | m");
    require((m + i) % 3 == 0, "bracken_tan_tan: inadmissible, 3 does not divide m+i");
    const unsigned s = std::gcd(m, i);
    require((m / s) % 2 == 1, "bracken_tan_tan: inadmissible, m/gcd(m,i) is even");
    const unsigned n = 3 * m;
    auto field = gf::FieldTable::make(2, n);
    const std::uint32_t alpha = field->generator();
    const std::uint32_t alpha_q = field->frobenius(alpha, m);  // alpha^(2^m)
    const std::uint64_t e1 = (1ull << i) + 1;
    const std::uint64_t e2 = (1ull << (2 * m)) + (1ull << (m + i));
    std::vector<std::uint32_t> table(size_t{1} << n);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const std::uint32_t t1 = field->mul(alpha, field->pow(x, static_cast<long long>(e1)));
        const std::uint32_t t2 = field->mul(alpha_q, field->pow(x, static_cast<long long>(e2)));
        table[x] = field->add(t1, t2);
    }
    FamilyFunction out{VectorialFunction::from_table(n, n, std::move(table)), s, 0};
    return out;
}

}  // namespace cadet::boolfn
