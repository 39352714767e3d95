#ifndef CADET_CONSTRUCTIONS_HPP
#define CADET_CONSTRUCTIONS_HPP

// Code constructions studied by this library: the binary code on the
// support of a bent function, the length-2^n code of a vectorial function,
// the first-order Reed-Muller code, a ternary two-dimensional trace code,
// and Steiner-system extraction from differentially two-valued functions
// through weight-4 dual codewords.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cadet/boolfn.hpp"
#include "cadet/code.hpp"
#include "cadet/designs.hpp"
#include "cadet/predictor.hpp"

namespace cadet::constructions {

struct ConstructionReport {
    code::LinearCode code;
    // Field elements (or indices) labelling the coordinate positions, in
    // strictly increasing element-code order.
    std::vector<std::uint32_t> coordinate_labels;
    code::WeightDistribution enumerated;
    std::optional<predictor::PredictedDistribution> predicted;
    bool predicate_holds = false;  // bent / bent-vectorial / two-valued
    bool match = false;            // enumerated == predicted
    std::string note;
};

// C(D_f) for a Boolean f on GF(2^n): coordinates are the support of f in
// increasing element-code order; the rows are x -> Tr(x d) over the power
// basis of x plus the all-one row.
ConstructionReport code_from_bent_support(const boolfn::VectorialFunction& f,
                                          std::uint64_t budget = code::kDefaultCodewordBudget);

// C(F) for F: GF(2^n) -> GF(2^l): length 2^n, rows Tr(a F(x)) over an
// a-basis of GF(2^l), Tr(b x) over a b-basis of GF(2^n), plus the all-one
// row. For bent vectorial F the four-weight table is attached as the
// prediction; for l == n and differentially two-valued F, the two-valued
// closed form.
ConstructionReport code_from_vectorial(const boolfn::VectorialFunction& f,
                                       std::uint64_t budget = code::kDefaultCodewordBudget);

// First-order Reed-Muller code [2^n, n+1, 2^(n-1)] on the standard
// coordinate order.
code::LinearCode rm1(unsigned n);

// The ternary code {(Tr(a alpha^(4i) + b alpha^(2i)))_i : a, b} of length
// (3^m - 1)/2, m odd, with parameters [(3^m-1)/2, 2m, 3^(m-1) - 3^((m-1)/2)].
ConstructionReport ternary_code(unsigned m, std::uint64_t budget = code::kDefaultCodewordBudget);

// Supports {x, x+a, y, y+a} of the weight-4 dual codewords of the
// length-2^n code of F, collected by bucketing x by F(x)+F(x+a) per
// derivative direction a. Each block arises from exactly three pairings
// and is deduplicated. Works for any output degree l <= n.
designs::Design steiner_from_function(const boolfn::VectorialFunction& f,
                                      unsigned max_n = boolfn::kDefaultMaxN);

// Number of weight-4 dual blocks through the pair {x1, x2}:
// (delta(x1+x2, F(x1)+F(x2)) - 2) / 2.
Rat pair_lambda(const boolfn::VectorialFunction& f, std::uint32_t x1, std::uint32_t x2);

}  // namespace cadet::constructions

#endif
