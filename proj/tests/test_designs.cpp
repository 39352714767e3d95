#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cadet/constructions.hpp"
#include "cadet/designs.hpp"
#include "cadet/errors.hpp"

using cadet::Int;
using cadet::Rat;
using namespace cadet::designs;
using cadet::code::LinearCode;
using cadet::gf::FieldTable;

namespace {

Design fano() {
    auto d = Design::from_blocks(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    d.declared = DesignParams{2, 3, 1};
    return d;
}

}  // namespace

TEST_CASE("t-design verification on the Fano plane") {
    auto d = fano();
    auto lb = is_t_design(d, 2, kDefaultStepBudget, CountingSide::Blocks);
    auto lp = is_t_design(d, 2, kDefaultStepBudget, CountingSide::Points);
    REQUIRE(lb.has_value());
    CHECK(*lb == 1);
    CHECK(lb == lp);

    // Dropping one block destroys the property on both strategies.
    Design broken = d;
    broken.blocks.pop_back();
    broken.mult.pop_back();
    CHECK(!is_t_design(broken, 2, kDefaultStepBudget, CountingSide::Blocks));
    CHECK(!is_t_design(broken, 2, kDefaultStepBudget, CountingSide::Points));

    CHECK_THROWS_AS(is_t_design(d, 4), std::invalid_argument);  // t > block size
}

TEST_CASE("empty designs") {
    Design e;
    e.nu = 10;
    CHECK(is_t_design(e, 2) == Int(0));
    CHECK(is_t_design(e, 7) == Int(0));
}

TEST_CASE("intersection numbers") {
    auto d = fano();
    CHECK(intersection_number(7, 3, 1, 2, 1, 1) == Rat(2));
    CHECK(intersection_number(7, 3, 1, 2, 0, 2) == Rat(1));  // t0=0, t1=t is lambda

    // Exhaustive oracle over every disjoint (T0, T1) of each shape.
    for (unsigned t0 = 0; t0 <= 2; ++t0)
        for (unsigned t1 = 0; t0 + t1 <= 2; ++t1) {
            const Rat want = intersection_number(7, 3, 1, 2, t0, t1);
            std::mt19937_64 rng(7 * t0 + t1);
            for (int rep = 0; rep < 20; ++rep) {
                std::vector<std::uint32_t> pts{0, 1, 2, 3, 4, 5, 6};
                std::shuffle(pts.begin(), pts.end(), rng);
                std::vector<std::uint32_t> s0(pts.begin(), pts.begin() + t0);
                std::vector<std::uint32_t> s1(pts.begin() + t0, pts.begin() + t0 + t1);
                std::sort(s0.begin(), s0.end());
                std::sort(s1.begin(), s1.end());
                CHECK(Rat(count_blocks_containing_avoiding(d, s1, s0)) == want);
            }
        }
    CHECK_THROWS_AS(intersection_number(7, 3, 1, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("complement designs") {
    auto d = fano();
    auto c = complement_design(d);
    REQUIRE(c.declared.has_value());
    CHECK(c.declared->k == 4);
    CHECK(c.declared->lambda == 2);
    CHECK(is_t_design(c, 2) == Int(2));
    // Involution on blocks.
    auto back = complement_design(c);
    CHECK(back.blocks == d.blocks);
    CHECK(back.mult == d.mult);
    CHECK(back.declared->lambda == 1);

    SUBCASE("k = nu - t boundary") {
        // All 5-subsets of 7 points form a 2-(7,5,10) design; k = nu - t.
        std::vector<std::vector<std::uint32_t>> blocks;
        std::vector<std::uint32_t> pts{0, 1, 2, 3, 4, 5, 6};
        for (unsigned a = 0; a < 7; ++a)
            for (unsigned b = a + 1; b < 7; ++b) {
                std::vector<std::uint32_t> blk;
                for (std::uint32_t p = 0; p < 7; ++p)
                    if (p != a && p != b) blk.push_back(p);
                blocks.push_back(blk);
            }
        auto big = Design::from_blocks(7, blocks);
        big.declared = DesignParams{2, 5, *is_t_design(big, 2)};
        CHECK(big.declared->lambda == 10);
        auto comp = complement_design(big);
        CHECK(comp.declared->k == 2);
        CHECK(is_t_design(comp, 2) == Int(1));
    }

    SUBCASE("empty design complements to itself") {
        Design e;
        e.nu = 9;
        e.declared = DesignParams{2, 4, 0};
        auto ce = complement_design(e);
        CHECK(ce.blocks.empty());
        CHECK(ce.declared->lambda == 0);
    }
}

TEST_CASE("promoted lambda") {
    CHECK(promoted_lambda(10, 9, 1, 2) == Rat(1));
    CHECK(promoted_lambda(8, 6, 3, 2) == Rat(3));
    // t = nu - k leaves lambda unchanged.
    CHECK(promoted_lambda(9, 7, 5, 2) == Rat(5));
    CHECK_THROWS_AS(promoted_lambda(10, 4, 1, 2), std::invalid_argument);
}

TEST_CASE("simplicity bound") {
    CHECK(simplicity_w(2, 1, 17) == 17);
    CHECK(simplicity_w(2, 9, 40) == 40);  // binary: always nu
    CHECK(simplicity_w(3, 6, 13) == 11);
    CHECK(simplicity_w(3, 1, 5) == 1);
}

TEST_CASE("support designs") {
    auto f2 = FieldTable::make(2, 1);
    auto rep = LinearCode::from_rows(f2, {{1, 1, 1, 1}});
    auto d4 = support_design(rep, 4);
    CHECK(d4.blocks.size() == 1);
    CHECK(d4.blocks[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(support_design(rep, 2).blocks.empty());  // A_2 = 0
    CHECK(support_design(rep, 0).blocks.empty());

    // Extended Hamming [8,4,4]: B_4 is the Steiner system S(3,4,8).
    auto eh = cadet::constructions::rm1(3);
    auto b4 = support_design(eh, 4);
    CHECK(b4.blocks.size() == 14);
    CHECK(b4.is_simple());  // binary support designs never repeat blocks
    CHECK(is_t_design(b4, 3) == Int(1));
    CHECK(is_t_design(b4, 2) == Int(3));
    CHECK(is_t_design(b4, 3, kDefaultStepBudget, CountingSide::Points) ==
          is_t_design(b4, 3, kDefaultStepBudget, CountingSide::Blocks));

    // Ternary multiplicities divide by q - 1 = 2 exactly.
    auto tern = cadet::constructions::ternary_code(3);
    auto db4 = support_design(tern.code.dual(), 4);
    CHECK(db4.blocks.size() == 13);
    CHECK(db4.is_simple());
}

TEST_CASE("intersection numbers agree with counts on a verified design") {
    auto eh = cadet::constructions::rm1(3);
    auto b4 = support_design(eh, 4);
    const Int lambda = *is_t_design(b4, 3);
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::uint32_t> pts{0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(pts.begin(), pts.end(), rng);
        const unsigned t0 = static_cast<unsigned>(rng() % 3);
        const unsigned t1 = static_cast<unsigned>(rng() % (4 - t0));
        std::vector<std::uint32_t> s0(pts.begin(), pts.begin() + t0);
        std::vector<std::uint32_t> s1(pts.begin() + t0, pts.begin() + t0 + t1);
        std::sort(s0.begin(), s0.end());
        std::sort(s1.begin(), s1.end());
        CHECK(Rat(count_blocks_containing_avoiding(b4, s1, s0)) ==
              intersection_number(8, 4, lambda, 3, t0, t1));
    }
}

TEST_CASE("budget guard") {
    // Point-side forced on a large subset space must trip the step budget.
    auto eh = cadet::constructions::rm1(3);
    auto b4 = support_design(eh, 4);
    CHECK_THROWS_AS(is_t_design(b4, 3, 10, CountingSide::Points), cadet::BudgetError);
}

TEST_CASE("disjointness counts on the bent-support weight-16 class") {
    // lambda(2,0) of the 2-(36,16,12) design against per-pair counting.
    auto field = FieldTable::make(2, 6);
    auto f = cadet::boolfn::VectorialFunction::from_exponent(field, 3)
                 .scaled(field->generator())
                 .traced_to(1);
    const auto rep = cadet::constructions::code_from_bent_support(f);
    const auto b16 = support_design(rep.code, 16);
    REQUIRE(is_t_design(b16, 2) == Int(12));
    const Rat want = intersection_number(36, 16, 12, 2, 2, 0);
    CHECK(want == Rat(Int(12) * cadet::binom(34, 16), cadet::binom(34, 14)));
    std::mt19937_64 rng(5);
    for (int rep2 = 0; rep2 < 20; ++rep2) {
        const auto a = static_cast<std::uint32_t>(rng() % 36);
        auto b = static_cast<std::uint32_t>(rng() % 36);
        while (b == a) b = static_cast<std::uint32_t>(rng() % 36);
        CHECK(Rat(count_blocks_containing_avoiding(b16, {}, {std::min(a, b), std::max(a, b)})) ==
              want);
    }
}
