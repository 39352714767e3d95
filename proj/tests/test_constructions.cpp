#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cadet/constructions.hpp"
#include "cadet/moments.hpp"

using namespace cadet;
using namespace cadet::constructions;
using boolfn::VectorialFunction;
using code::LinearCode;
using gf::FieldTable;

namespace {

VectorialFunction bent6() {
    auto f = FieldTable::make(2, 6);
    return VectorialFunction::from_exponent(f, 3).scaled(f->generator()).traced_to(1);
}

VectorialFunction vbent6() {
    auto f = FieldTable::make(2, 6);
    return VectorialFunction::from_exponent(f, 3).scaled(f->generator()).traced_to(3);
}

}  // namespace

TEST_CASE("code on a bent support") {
    const auto rep = code_from_bent_support(bent6());
    CHECK(rep.predicate_holds);
    CHECK(rep.code.length() == 36);
    CHECK(rep.code.dimension() == 7);
    CHECK(rep.coordinate_labels.size() == 36);
    CHECK(std::is_sorted(rep.coordinate_labels.begin(), rep.coordinate_labels.end()));
    // The labels are exactly the support of f, in increasing code order.
    {
        const auto f32 = bent6();
        std::vector<std::uint32_t> want;
        for (std::uint32_t x = 0; x < 64; ++x)
            if (f32.table()[x]) want.push_back(x);
        CHECK(rep.coordinate_labels == want);
    }
    CHECK(rep.enumerated.enumerator() == "1+63z^16+63z^20+z^36");
    CHECK(rep.enumerated.total() == 128);
    CHECK(rep.match);

    // Dual distance 4 via the exact transform.
    const auto dual = moments::macwilliams_dual(rep.enumerated, 7, 2);
    CHECK(dual.min_positive_weight() == 4);

    // Permuting coordinate labels permutes columns but fixes the distribution.
    auto rows = rep.code.rows();
    for (auto& r : rows) std::reverse(r.begin(), r.end());
    const auto permuted = LinearCode::from_rows(rep.code.field(), rows);
    CHECK(permuted.weight_distribution() == rep.enumerated);
}

TEST_CASE("code of a bent vectorial function") {
    const auto rep = code_from_vectorial(vbent6());
    CHECK(rep.predicate_holds);
    CHECK(rep.code.length() == 64);
    CHECK(rep.code.dimension() == 10);
    CHECK(rep.enumerated.enumerator() == "1+448z^28+126z^32+448z^36+z^64");
    CHECK(rep.match);
    CHECK(rep.enumerated.min_positive_weight() == 28);

    // The middle weight class is the Reed-Muller weight-32 class.
    const auto b32 = designs::support_design(rep.code, 32);
    const auto rm = rm1(6);
    const auto rm32 = designs::support_design(rm, 32);
    CHECK(b32.blocks == rm32.blocks);
    CHECK(b32.mult == rm32.mult);
}

TEST_CASE("first-order reed-muller code") {
    const auto rm = rm1(6);
    CHECK(rm.length() == 64);
    CHECK(rm.dimension() == 7);
    const auto wd = rm.weight_distribution();
    CHECK(wd.min_positive_weight() == 32);
    CHECK(wd.counts[32] == 126);
    CHECK(wd.counts[64] == 1);
    CHECK_THROWS_AS(rm1(1), std::invalid_argument);
}

TEST_CASE("code of the kasami map on GF(2^5)") {
    const auto rep = code_from_vectorial(boolfn::kasami(5, 2).f);
    CHECK(rep.code.length() == 32);
    CHECK(rep.code.dimension() == 11);
    CHECK(rep.predicate_holds);
    CHECK(rep.match);
    CHECK(rep.enumerated.min_positive_weight() == 12);
    CHECK(rep.code.dual().weight_distribution().min_positive_weight() == 6);
}

TEST_CASE("zero function degenerates to the reed-muller span") {
    auto zero = VectorialFunction::from_table(4, 4, std::vector<std::uint32_t>(16, 0));
    const auto rep = code_from_vectorial(zero);
    CHECK(rep.code.dimension() == 5);
    CHECK(rep.code.same_row_space(rm1(4)));
    CHECK(!rep.predicate_holds);
}

TEST_CASE("ternary trace code") {
    const auto rep = ternary_code(3);
    CHECK(rep.code.length() == 13);
    CHECK(rep.code.dimension() == 6);
    CHECK(rep.enumerated.min_positive_weight() == 6);
    CHECK(rep.match);
    for (unsigned w = 1; w <= 13; ++w)
        if (rep.enumerated.counts[w] != 0) CHECK((w == 6 || w == 9 || w == 12));

    const auto dual = rep.code.dual();
    CHECK(dual.weight_distribution().min_positive_weight() == 4);
    const auto b4 = designs::support_design(dual, 4);
    CHECK(b4.blocks.size() == 13);
    CHECK(designs::is_t_design(b4, 2) == Int(1));

    CHECK_THROWS_AS(ternary_code(4), std::invalid_argument);
}

TEST_CASE("steiner extraction from derivative buckets") {
    SUBCASE("apn functions give no weight-4 dual words") {
        const auto d = steiner_from_function(boolfn::kasami(5, 2).f);
        CHECK(d.blocks.empty());
        CHECK(pair_lambda(boolfn::kasami(5, 2).f, 3, 17) == Rat(0));
    }

    SUBCASE("x^5 on GF(2^4) gives S(2,4,16), cross-checked against the dual") {
        // x^5 is quadratic with derivative kernels of size 4: two-valued
        // {0,4}, so the weight-4 dual supports tile pairs exactly once.
        auto f = VectorialFunction::from_exponent(4, 5);
        CHECK(f.two_valued_s() == 2);
        const auto d = steiner_from_function(f);
        CHECK(Int(static_cast<std::uint64_t>(d.blocks.size())) ==
              moments::a4_dual_from_two_valued(4, 2));
        CHECK(designs::is_t_design(d, 2) == Int(1));

        // Independent oracle: enumerate the dual code of C(F) directly.
        const auto rep = code_from_vectorial(f);
        const auto dual = rep.code.dual();
        const auto oracle = designs::support_design(dual, 4);
        CHECK(oracle.blocks == d.blocks);
        CHECK(oracle.mult == d.mult);

        for (auto [x1, x2] : {std::pair<std::uint32_t, std::uint32_t>{0, 1}, {3, 9}, {7, 14}})
            CHECK(pair_lambda(f, x1, x2) == Rat(1));
    }

    SUBCASE("bent vectorial code's weight-4 dual class") {
        const auto d = steiner_from_function(vbent6());
        CHECK(d.blocks.size() == 1008);
        CHECK(designs::is_t_design(d, 2) == Int(3));
    }
}
