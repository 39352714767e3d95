#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cadet/boolfn.hpp"
#include "cadet/errors.hpp"

using namespace cadet::boolfn;
using cadet::gf::FieldTable;

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

TEST_CASE("power-map construction") {
    auto id = VectorialFunction::from_exponent(5, 1);
    for (std::uint32_t x = 0; x < 32; ++x) CHECK(id.table()[x] == x);

    // Repeated-squaring oracle for x^13 = x^8 * x^4 * x.
    auto f = FieldTable::make(2, 5);
    auto k = VectorialFunction::from_exponent(f, 13);
    for (std::uint32_t x = 0; x < 32; ++x) {
        const auto x2 = f->mul(x, x);
        const auto x4 = f->mul(x2, x2);
        const auto x8 = f->mul(x4, x4);
        CHECK(k.table()[x] == f->mul(f->mul(x8, x4), x));
    }
    CHECK(k.table()[0] == 0);
}

TEST_CASE("trace composition is additive and balanced") {
    auto f = FieldTable::make(2, 6);
    auto tr3 = VectorialFunction::from_exponent(f, 1).traced_to(3);
    CHECK(tr3.l() == 3);
    std::map<std::uint32_t, int> fibers;
    for (std::uint32_t x = 0; x < 64; ++x) {
        fibers[tr3.table()[x]]++;
        for (std::uint32_t y = 0; y < 64; ++y)
            CHECK(tr3.table()[x ^ y] == (tr3.table()[x] ^ tr3.table()[y]));
    }
    CHECK(fibers.size() == 8);  // surjective, balanced
    for (auto [v, n] : fibers) CHECK(n == 8);

    CHECK_THROWS_AS(VectorialFunction::from_exponent(6, 3).traced_to(4), std::invalid_argument);
}

TEST_CASE("walsh transform") {
    const VectorialFunction funcs[] = {kasami(5, 2).f, vbent6(), bent6()};
    std::mt19937_64 rng(0);

    SUBCASE("fast rows equal direct summation") {
        for (const auto& f : funcs) {
            for (int rep = 0; rep < 50; ++rep) {
                const auto lambda = static_cast<std::uint32_t>(1 + rng() % ((1u << f.l()) - 1));
                const auto mu = static_cast<std::uint32_t>(rng() % (1u << f.n()));
                CHECK(f.walsh_row(lambda)[mu] == f.walsh_direct(lambda, mu));
            }
        }
    }

    SUBCASE("parseval per component") {
        for (const auto& f : funcs) {
            for (std::uint32_t lambda = 1; lambda < (1u << f.l()); ++lambda) {
                std::int64_t sum = 0;
                for (auto w : f.walsh_row(lambda)) sum += w * w;
                CHECK(sum == 1ll << (2 * f.n()));
            }
        }
    }

    SUBCASE("constant zero function") {
        auto z = VectorialFunction::from_table(4, 2, std::vector<std::uint32_t>(16, 0));
        CHECK(z.walsh_direct(1, 0) == 16);  // Tr(lambda 0) = 0 everywhere
        CHECK(z.walsh_direct(3, 0) == 16);
    }
}

TEST_CASE("bentness") {
    CHECK(bent6().is_bent());
    CHECK(vbent6().is_bent_vectorial());
    // Odd input degree can never be bent.
    auto odd = VectorialFunction::from_exponent(5, 3).traced_to(1);
    CHECK(!odd.is_bent());
    // x (linear) is not bent either.
    auto lin = VectorialFunction::from_exponent(6, 1).traced_to(1);
    CHECK(!lin.is_bent());
    CHECK_THROWS_AS(vbent6().is_bent(), std::invalid_argument);
}

TEST_CASE("differential spectra") {
    auto k5 = kasami(5, 2);
    CHECK(k5.exponent == 13);
    CHECK(k5.predicted_s == 1);
    const auto sp = k5.f.diff_spectrum();
    CHECK(sp.delta == 2);
    CHECK(sp.histogram.size() == 2);
    CHECK(k5.f.two_valued_s() == 1);

    SUBCASE("row sums and derivative membership") {
        for (std::uint32_t a = 1; a < 32; ++a) {
            std::uint64_t row = 0;
            for (std::uint32_t b = 0; b < 32; ++b) row += sp.at(a, b);
            CHECK(row == 32);
            for (std::uint32_t x = 0; x < 32; ++x)
                CHECK(sp.at(a, k5.f.table()[x] ^ k5.f.table()[x ^ a]) >= 2);
        }
    }

    SUBCASE("identity map is two-valued with s = n") {
        auto id = VectorialFunction::from_exponent(5, 1);
        CHECK(id.two_valued_s() == 5);
    }

    SUBCASE("inverse map is two-valued only for odd n") {
        auto inv5 = VectorialFunction::from_exponent(5, 30);  // x^(2^5-2), APN
        CHECK(inv5.two_valued_s() == 1);
        auto inv6 = VectorialFunction::from_exponent(6, 62);  // 4-uniform, {0,2,4}
        CHECK(inv6.diff_spectrum().delta == 4);
        CHECK(!inv6.two_valued_s().has_value());
    }

    SUBCASE("budget cap") {
        auto big = VectorialFunction::from_exponent(12, 3);
        CHECK_THROWS_AS(big.diff_spectrum(), cadet::BudgetError);
        CHECK(big.diff_spectrum(12).delta > 0);
    }
}

TEST_CASE("fourth-moment design criterion") {
    CHECK(kasami(5, 2).f.fourth_moment_design_check());
    CHECK(kasami(10, 2).f.fourth_moment_design_check());
    // The inverse map on odd degree is APN, hence passes too.
    CHECK(VectorialFunction::from_exponent(5, 30).fourth_moment_design_check());
    // The even-degree inverse map has spectrum {0,2,4} and must fail.
    CHECK(!VectorialFunction::from_exponent(6, 62).fourth_moment_design_check());
    // A scrambled table is essentially never two-valued.
    std::mt19937_64 rng(42);
    std::vector<std::uint32_t> tbl(32);
    for (auto& v : tbl) v = static_cast<std::uint32_t>(rng() % 32);
    auto scrambled = VectorialFunction::from_table(5, 5, tbl);
    REQUIRE(!scrambled.two_valued_s().has_value());
    CHECK(!scrambled.fourth_moment_design_check());
    CHECK_THROWS_AS(vbent6().fourth_moment(), std::invalid_argument);  // l != n
}

TEST_CASE("kasami family") {
    CHECK_THROWS_WITH_AS(kasami(6, 2), "kasami: inadmissible, n = 3i", std::invalid_argument);
    CHECK_THROWS_AS(kasami(8, 2), std::invalid_argument);  // n/s even

    auto k10 = kasami(10, 2);
    CHECK(k10.predicted_s == 2);
    CHECK(k10.f.two_valued_s() == 2);

    auto k9 = kasami(9, 6);
    CHECK(k9.predicted_s == 3);
    CHECK(k9.f.two_valued_s() == 3);

    auto k7 = kasami(7, 1);  // exponent 3, APN
    CHECK(k7.exponent == 3);
    CHECK(k7.f.two_valued_s() == 1);

    // Walsh values confined to {0, +-2^((n+s)/2)} for admissible inputs.
    for (const auto& [fam, n] : {std::pair<FamilyFunction, unsigned>{kasami(5, 2), 5},
                                 {kasami(9, 6), 9},
                                 {kasami(10, 2), 10}}) {
        const std::int64_t big = 1ll << ((n + fam.predicted_s) / 2);
        for (auto w : fam.f.walsh_value_set()) CHECK((w == 0 || w == big || w == -big));
    }
}

TEST_CASE("affine combinations") {
    auto f = FieldTable::make(2, 5);
    auto cube = VectorialFunction::from_exponent(f, 3);
    auto lin = VectorialFunction::from_exponent(f, 1);
    const auto sum = cube.plus(lin);
    const auto shifted = cube.plus_linear(1);
    for (std::uint32_t x = 0; x < 32; ++x) {
        CHECK(sum.table()[x] == (cube.table()[x] ^ x));
        CHECK(shifted.table()[x] == (cube.table()[x] ^ x));
    }
    CHECK_THROWS_AS(cube.plus(VectorialFunction::from_exponent(4, 3)), std::invalid_argument);
}

TEST_CASE("gold family") {
    auto g5 = gold(5, 1);
    CHECK(g5.predicted_s == 1);
    CHECK(g5.f.two_valued_s() == 1);
    auto g62 = gold(6, 2);
    CHECK(g62.predicted_s == 2);
    CHECK(g62.f.two_valued_s() == 2);
    CHECK_THROWS_AS(gold(6, 1), std::invalid_argument);  // n/s even
}

TEST_CASE("bracken-tan-tan family") {
    CHECK_THROWS_AS(bracken_tan_tan(3, 3), std::invalid_argument);  // 3 | m
    CHECK_THROWS_AS(bracken_tan_tan(2, 2), std::invalid_argument);  // 3 does not divide m+i
    CHECK_THROWS_AS(bracken_tan_tan(4, 2), std::invalid_argument);  // m/s even
    CHECK_THROWS_AS(bracken_tan_tan(2, 1), std::invalid_argument);  // m/s even again

    auto b1 = bracken_tan_tan(1, 2);  // n = 3
    CHECK(b1.predicted_s == 1);
    CHECK(b1.f.two_valued_s() == 1);
    auto b2 = bracken_tan_tan(2, 4);  // n = 6, s = 2
    CHECK(b2.predicted_s == 2);
    CHECK(b2.f.two_valued_s() == 2);
    const std::int64_t big = 1ll << ((6 + 2) / 2);
    for (auto w : b2.f.walsh_value_set()) CHECK((w == 0 || w == big || w == -big));
}

TEST_CASE("table file round trip") {
    auto k5 = kasami(5, 2).f;
    auto back = VectorialFunction::from_text(k5.to_text());
    CHECK(back.n() == 5);
    CHECK(back.l() == 5);
    CHECK(back.table() == k5.table());
    CHECK_THROWS_AS(VectorialFunction::from_text("bad"), std::invalid_argument);
    CHECK_THROWS_AS(VectorialFunction::from_table(4, 2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VectorialFunction::from_table(2, 2, {0, 1, 4, 0}), std::invalid_argument);
}
