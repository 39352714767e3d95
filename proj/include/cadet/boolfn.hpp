#ifndef CADET_BOOLFN_HPP
#define CADET_BOOLFN_HPP

// Vectorial Boolean functions F: GF(2^n) -> GF(2^l) as lookup tables:
// Walsh spectra (fast transform over GF(2)^n plus a direct-sum cross-check
// path), bentness, differential spectra and two-valuedness, the fourth
// Walsh moment criterion, and the named monomial/binomial families with
// known two-valued spectra.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/gf.hpp"

namespace cadet::boolfn {

// Full differential spectra walk 2^(2n) table cells; this cap keeps them to
// about 2^22 of work by default.
inline constexpr unsigned kDefaultMaxN = 11;

struct DifferentialSpectrum {
    unsigned delta = 0;                              // max delta(a,b)
    std::map<unsigned, std::uint64_t> histogram;     // delta value -> #(a,b) pairs
    std::vector<std::uint16_t> table;                // delta(a,b) at [(a-1) << l | b]
    unsigned n = 0, l = 0;

    unsigned at(std::uint32_t a, std::uint32_t b) const {
        return table[(size_t{a} - 1) << l | b];
    }
};

class VectorialFunction {
  public:
    static VectorialFunction from_table(unsigned n, unsigned l, std::vector<std::uint32_t> table);
    // Power map x -> x^e over GF(2^n) with the default modulus (0 -> 0).
    static VectorialFunction from_exponent(unsigned n, std::uint64_t e);
    static VectorialFunction from_exponent(gf::FieldPtr field, std::uint64_t e);

    unsigned n() const { return n_; }
    unsigned l() const { return l_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    const gf::FieldPtr& input_field() const { return in_field_; }
    const gf::FieldPtr& output_field() const { return out_field_; }

    // x -> c * F(x), c an output-field element code.
    VectorialFunction scaled(std::uint32_t c) const;
    // x -> F(x) + G(x) (matching degrees).
    VectorialFunction plus(const VectorialFunction& g) const;
    // x -> F(x) + Tr-compatible linear term b*x (only for l == n).
    VectorialFunction plus_linear(std::uint32_t b) const;
    // Compose with the trace onto GF(2^d), d | l. Outputs are re-encoded as
    // element codes of a standalone GF(2^d) through a subfield embedding.
    VectorialFunction traced_to(unsigned d) const;

    // Walsh coefficient W(lambda, mu) = sum_x (-1)^(Tr(lambda F(x)) + Tr(mu x))
    // by direct summation (the slow path, kept as the transform oracle).
    std::int64_t walsh_direct(std::uint32_t lambda, std::uint32_t mu) const;
    // All W(lambda, mu) for fixed lambda != 0, indexed by mu, via the fast
    // transform in n 2^n steps.
    std::vector<std::int64_t> walsh_row(std::uint32_t lambda) const;
    std::set<std::int64_t> walsh_value_set() const;  // over lambda != 0, all mu

    bool is_bent() const;            // l == 1
    bool is_bent_vectorial() const;  // every nonzero component bent

    DifferentialSpectrum diff_spectrum(unsigned max_n = kDefaultMaxN) const;
    // s with delta-value set exactly {0, 2^s}, if the function is
    // differentially two-valued.
    std::optional<unsigned> two_valued_s(unsigned max_n = kDefaultMaxN) const;

    // sum over (a,b), a != 0, of W(a,b)^4; and the check
    // fourth_moment == 2^(3n) (2^n - 1) delta, which holds iff the function
    // is differentially two-valued (l == n only).
    Int fourth_moment() const;
    bool fourth_moment_design_check(unsigned max_n = kDefaultMaxN) const;

    // Function table file: header "n l", then 2^n hex output codes.
    std::string to_text() const;
    static VectorialFunction from_text(const std::string& text);

  private:
    VectorialFunction() = default;

    unsigned n_ = 0, l_ = 0;
    gf::FieldPtr in_field_, out_field_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint8_t> tr1_in_, tr1_out_;  // absolute-trace bit tables
};

struct FamilyFunction {
    VectorialFunction f;
    unsigned predicted_s = 0;  // differential exponent the family guarantees
    std::uint64_t exponent = 0;
};

// x^(2^(2i) - 2^i + 1) over GF(2^n); admissible when n != 3i and n/gcd(n,i)
// is odd, with s = gcd(n,i).
FamilyFunction kasami(unsigned n, unsigned i);
// x^(2^i + 1) over GF(2^n); admissible when n/gcd(n,i) is odd, s = gcd(n,i).
FamilyFunction gold(unsigned n, unsigned i);
// alpha x^(2^i+1) + alpha^(2^m) x^(2^(2m) + 2^(m+i)) over GF(2^(3m));
// admissible when 3 does not divide m, 3 | (m+i) and m/gcd(m,i) is odd,
// with s = gcd(m,i). alpha is the field's default primitive element.
FamilyFunction bracken_tan_tan(unsigned m, unsigned i);

}  // namespace cadet::boolfn

#endif
