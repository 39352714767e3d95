#ifndef CADET_GF_HPP
#define CADET_GF_HPP

// Exact arithmetic in GF(p^m) for small p via log/antilog tables.
//
// Elements are identified by their integer code: the base-p digit vector of
// the coefficient representation, so code(c_{m-1} u^{m-1} + ... + c_0) =
// sum c_i p^i. All file formats and coordinate orderings in the library are
// defined over element codes. A FieldTable is immutable after construction
// and safe to share across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cadet::gf {

class FieldTable;
using FieldPtr = std::shared_ptr<const FieldTable>;

class FieldTable {
  public:
    // Builds GF(p^m). When no modulus is given, a fixed per-(p,m) primitive
    // polynomial is used and the generator is the residue class of u. A
    // caller-supplied modulus must be monic of degree m and irreducible; if
    // it is irreducible but not primitive, an explicit generator (an element
    // code of multiplicative order p^m-1) is required.
    //
    // modulus coefficients are most-significant-first: {c_m, ..., c_0}.
    static FieldPtr make(unsigned p, unsigned m,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt,
                         std::optional<std::uint32_t> generator = std::nullopt);

    // Parses "p m c_m c_{m-1} ... c_0" (the CLI --field format). The
    // coefficient list may be omitted to get the default modulus.
    static FieldPtr parse(const std::string& spec);

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }  // p^m
    const std::vector<unsigned>& modulus() const { return modulus_; }  // {c_m,...,c_0}
    std::uint32_t generator() const { return generator_; }
    std::string spec_string() const;

    // Arithmetic on element codes.
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg(std::uint32_t x) const;
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        if (x == 0 || y == 0) return 0;
        return antilog_[(log_[x] + log_[y]) % (q_ - 1)];
    }
    std::uint32_t inv(std::uint32_t x) const;
    // x^e with e reduced mod p^m-1 for x != 0; 0^e = 0 for e > 0, 0^0 = 1.
    std::uint32_t pow(std::uint32_t x, long long e) const;
    std::uint32_t frobenius(std::uint32_t x, unsigned k) const;  // x^(p^k)

    std::uint32_t log(std::uint32_t x) const;            // x != 0
    std::uint32_t alpha_pow(std::uint64_t e) const { return antilog_[e % (q_ - 1)]; }

    // Trace onto the subfield GF(p^d), d | m: sum of x^(p^(d*i)). The result
    // is an element code of *this* field lying in the subfield (for d = 1
    // that is a code in 0..p-1, since prime-field elements are the constants).
    std::uint32_t trace(std::uint32_t x, unsigned target_degree) const;
    // Full table of trace(x, target_degree) indexed by element code.
    std::vector<std::uint32_t> trace_table(unsigned target_degree) const;

    // Sorted element codes of the subfield GF(p^d) inside this field.
    std::vector<std::uint32_t> subfield(unsigned d) const;

  private:
    FieldTable() = default;

    unsigned p_ = 0, m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<unsigned> modulus_;        // most-significant-first
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> log_;       // element code -> exponent (log_[0] unused)
    std::vector<std::uint32_t> antilog_;   // exponent -> element code
};

// Value-semantic element handle for call sites that prefer operators over
// raw codes. Hot loops should use FieldTable's code-level methods directly.
struct FieldElement {
    std::uint32_t code = 0;
    const FieldTable* field = nullptr;

    FieldElement() = default;
    FieldElement(std::uint32_t c, const FieldTable& f) : code(c), field(&f) {}

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend bool operator==(FieldElement a, FieldElement b) {
        return a.code == b.code && a.field == b.field;
    }
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
};

}  // namespace cadet::gf

#endif
