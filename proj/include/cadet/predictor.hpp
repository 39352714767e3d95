#ifndef CADET_PREDICTOR_HPP
#define CADET_PREDICTOR_HPP

// Closed-form weight distributions of shortened and punctured codes of
// design-supporting codes, parameterized weight-distribution tables for the
// bent / bent-vectorial / two-valued code families, and the design-count
// formulas that accompany them. Everything here is arithmetic on exact
// integers; hypothesis verification (is the parent code actually
// design-supporting?) lives in the designs and am modules.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cadet/bigint.hpp"
#include "cadet/code.hpp"

namespace cadet::predictor {

struct PredictedDistribution {
    unsigned nu = 0;
    std::vector<Int> counts;   // A_0 .. A_nu
    std::string provenance;    // which formula/table produced it
    unsigned dimension = 0;    // predicted dimension (0 = not stated)
    unsigned min_distance = 0;

    code::WeightDistribution as_weight_distribution() const { return {nu, counts}; }
    Int total() const;
};

// Shortening on any t-set T of a code supporting t-designs:
//   A_k(C_T) = C(k,t) C(nu-t,k) / (C(nu,t) C(nu-t,k-t)) * A_k(C), k >= 1,
// with A_0 = 1. Every predicted count must be a nonnegative integer, else a
// VerificationError flags a violated hypothesis.
PredictedDistribution shortened_predict(const std::vector<Int>& a, unsigned nu, unsigned t);

// Puncturing:
//   A_k(C^T) = sum_{i=0}^t C(nu-t,k) C(k+i,t) C(t,i) / (C(nu-t,k-t+i) C(nu,t)) * A_{k+i}(C).
PredictedDistribution punctured_predict(const std::vector<Int>& a, unsigned nu, unsigned t);

enum class TableFamily {
    BentCode,        // code from a bent support, length nu_f, dim n+1
    BentShort1,      // one coordinate shortened
    BentShort2,      // two coordinates shortened
    BentPunct1,      // one coordinate punctured
    BentPunct2,      // two coordinates punctured
    VBentCode,       // code from a bent vectorial function GF(2^2m) -> GF(2^l)
    VBentShort1,
    VBentShort2,
    VBentPunct1,
    VBentPunct2,
    TwoValuedCode,   // code of a differentially two-valued {0,2^s} function, l = n
};

struct TableParams {
    unsigned n = 0;     // bent families: input degree (even, >= 6); TwoValued: input degree
    unsigned nu_f = 0;  // bent families: support size
    unsigned m = 0;     // vectorial bent families: input degree 2m, m >= 3
    unsigned ell = 0;   // vectorial bent families: output degree
    unsigned s = 0;     // TwoValued: differential exponent, 1 <= s <= n-1, n+s even
};

TableFamily table_family_from_name(const std::string& name);
std::string table_family_name(TableFamily f);

PredictedDistribution table_predict(TableFamily family, const TableParams& p);

// Shortened count from a design lambda (t-design with parameter lambda_k at
// block size k): A_k(C_T) = C(nu-t,k)/C(nu-t,k-t) * (q-1) * lambda_k.
Int design_count_from_lambda(unsigned nu, unsigned k, const Int& lambda_k, unsigned t,
                             std::uint64_t q);

// Punctured-dual count from dual design lambdas: given lambda_dual[j] for
// j = 0..k+t, A_k((Cdual)^T) = (q-1) sum_i C(t,i) C(nu-t,k)/C(nu-t,k-t+i) lambda_dual[k+i].
Int dual_punctured_count(const std::vector<Int>& lambda_dual, unsigned nu, unsigned t, unsigned k,
                         std::uint64_t q);

// The three (k, lambda) 2-design parameter pairs of the length-2^n code of a
// two-valued {0,2^s} function with three-valued spectrum.
struct KLambda {
    Int k;
    Int lambda;
};
std::array<KLambda, 3> two_valued_design_lambdas(unsigned n, unsigned s);

}  // namespace cadet::predictor

#endif
