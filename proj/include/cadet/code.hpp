#ifndef CADET_CODE_HPP
#define CADET_CODE_HPP

// Linear codes over GF(q): construction from generator rows, exact weight
// distribution by exhaustive enumeration of the row space, dual bases,
// shortening and puncturing on coordinate sets, and the Griesmer bound.
//
// Weight distributions are always computed by full enumeration; there are no
// algebraic shortcuts here on purpose, since the enumerated counts serve as
// the independent side of every closed-form cross-check in the library.

#include <cstdint>
#include <string>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/gf.hpp"

namespace cadet::code {

inline constexpr std::uint64_t kDefaultCodewordBudget = 1ull << 26;

struct WeightDistribution {
    unsigned nu = 0;
    std::vector<Int> counts;  // A_0 .. A_nu

    Int total() const;
    // Smallest i > 0 with A_i > 0, or 0 if none (the zero code).
    unsigned min_positive_weight() const;
    // "1+63z^16+63z^20+z^36" style polynomial string.
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

class LinearCode {
  public:
    // Rows are element-code vectors over `field`; they need not be
    // independent. The stored basis is the reduced row echelon form, so two
    // codes are equal as row spaces iff their stored rows are equal.
    static LinearCode from_rows(gf::FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);

    const gf::FieldPtr& field() const { return field_; }
    unsigned length() const { return nu_; }
    unsigned dimension() const { return static_cast<unsigned>(rows_.size()); }
    Int size() const { return ipow(Int(field_->q()), dimension()); }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

    WeightDistribution weight_distribution(std::uint64_t budget = kDefaultCodewordBudget) const;
    unsigned minimum_distance(std::uint64_t budget = kDefaultCodewordBudget) const;

    LinearCode dual() const;
    LinearCode shortened(std::vector<unsigned> coords) const;
    LinearCode punctured(std::vector<unsigned> coords) const;

    // Supports (sorted coordinate lists) of all codewords of Hamming weight
    // w, one entry per codeword. Scalar multiples produce repeated entries.
    std::vector<std::vector<std::uint32_t>> supports_of_weight(
        unsigned w, std::uint64_t budget = kDefaultCodewordBudget) const;

    bool same_row_space(const LinearCode& other) const {
        return nu_ == other.nu_ && field_->q() == other.field_->q() && rows_ == other.rows_;
    }

    // Text format: header "q nu m", then m rows of nu element codes.
    std::string to_text() const;
    static LinearCode from_text(const std::string& text, gf::FieldPtr field = nullptr);

  private:
    LinearCode() = default;

    gf::FieldPtr field_;
    unsigned nu_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;  // RREF basis
};

// Griesmer length bound: sum_{i<m} ceil(d / q^i).
std::uint64_t griesmer_length_bound(unsigned m, std::uint64_t d, std::uint64_t q);
// Largest d whose Griesmer length bound fits in nu (0 if none).
std::uint64_t max_griesmer_d(std::uint64_t nu, unsigned m, std::uint64_t q);

}  // namespace cadet::code

#endif
