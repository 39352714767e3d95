#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cadet/gf.hpp"

using cadet::gf::FieldElement;
using cadet::gf::FieldTable;

TEST_CASE("default GF(2^6) uses the pinned primitive modulus") {
    auto f = FieldTable::make(2, 6);
    CHECK(f->q() == 64);
    CHECK(f->modulus() == std::vector<unsigned>{1, 0, 1, 1, 0, 1, 1});  // u^6+u^4+u^3+u+1
    CHECK(f->generator() == 2);                                         // alpha = u
    CHECK(f->pow(f->generator(), 63) == 1);
    CHECK(f->pow(f->generator(), 9) != 1);
}

TEST_CASE("prime fields and small extensions") {
    auto f2 = FieldTable::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->generator() == 1);
    CHECK(f2->add(1, 1) == 0);

    auto f27 = FieldTable::make(3, 3);
    CHECK(f27->q() == 27);
    // Exhaustive order check: generator powers hit every nonzero element.
    std::vector<bool> seen(27, false);
    for (unsigned e = 0; e < 26; ++e) {
        auto v = f27->alpha_pow(e);
        CHECK(!seen[v]);
        seen[v] = true;
    }
    CHECK(f27->pow(f27->generator(), 26) == 1);
}

TEST_CASE("construction rejects bad moduli") {
    // u^6 + 1 = (u^3 + 1)^2 is reducible.
    CHECK_THROWS_AS(FieldTable::make(2, 6, std::vector<unsigned>{1, 0, 0, 0, 0, 0, 1}),
                    std::invalid_argument);
    // u^6 + u^3 + 1 is irreducible but u has order 9, not 63.
    CHECK_THROWS_AS(FieldTable::make(2, 6, std::vector<unsigned>{1, 0, 0, 1, 0, 0, 1}),
                    std::invalid_argument);
    // The same modulus becomes usable once a full-order generator is given.
    const std::vector<unsigned> mod{1, 0, 0, 1, 0, 0, 1};
    bool built = false;
    for (std::uint32_t g = 2; g < 64 && !built; ++g) {
        try {
            auto f = FieldTable::make(2, 6, mod, g);
            built = true;
            CHECK(f->pow(g, 63) == 1);
            CHECK(f->pow(g, 21) != 1);
            CHECK(f->pow(g, 9) != 1);
            CHECK(f->pow(g, 7) != 1);
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(built);
    CHECK_THROWS_AS(FieldTable::make(11, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldTable::make(2, 25), std::invalid_argument);  // 2^25 over the cap
}

TEST_CASE("arithmetic identities") {
    auto f = FieldTable::make(2, 6);
    const std::uint32_t a = f->generator();
    CHECK(f->mul(f->pow(a, 5), f->pow(a, 60)) == f->pow(a, 2));  // exponents mod 63
    for (std::uint32_t x = 0; x < 64; ++x) CHECK(f->add(x, x) == 0);
    for (std::uint32_t x = 1; x < 64; ++x) CHECK(f->mul(x, f->inv(x)) == 1);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
    CHECK(f->pow(0, 5) == 0);
    CHECK(f->pow(0, 0) == 1);

    auto f27 = FieldTable::make(3, 3);
    for (std::uint32_t x = 1; x < 27; ++x) CHECK(f27->mul(x, f27->inv(x)) == 1);
    for (std::uint32_t x = 0; x < 27; ++x) CHECK(f27->add(x, f27->neg(x)) == 0);
}

TEST_CASE("frobenius is additive") {
    // Exhaustive for p^m <= 2^12, sampled above that.
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 6}, {3, 5}, {5, 3}, {7, 2}}) {
        auto f = FieldTable::make(p, m);
        for (std::uint32_t x = 0; x < f->q(); ++x)
            for (std::uint32_t y = 0; y < f->q(); ++y)
                CHECK(f->frobenius(f->add(x, y), 1) == f->add(f->frobenius(x, 1), f->frobenius(y, 1)));
    }
    auto big = FieldTable::make(2, 13);
    std::uint32_t x = 12345 % big->q(), y = 54321 % big->q();
    for (int i = 0; i < 50; ++i) {
        CHECK(big->frobenius(big->add(x, y), 1) == big->add(big->frobenius(x, 1), big->frobenius(y, 1)));
        x = big->mul(x, big->generator());
        y = big->add(y, x);
    }
}

TEST_CASE("trace properties") {
    auto f = FieldTable::make(2, 6);
    CHECK(f->trace(0, 1) == 0);
    CHECK(f->trace(0, 3) == 0);

    SUBCASE("polynomial-evaluation oracle for the absolute trace") {
        for (std::uint32_t x = 0; x < 64; ++x) {
            std::uint32_t acc = 0;
            for (unsigned k = 0; k < 6; ++k) acc = f->add(acc, f->pow(x, 1ll << k));
            CHECK(f->trace(x, 1) == acc);
        }
    }

    SUBCASE("fibers onto GF(2^3) all have size 8") {
        std::map<std::uint32_t, int> fibers;
        for (std::uint32_t x = 0; x < 64; ++x) fibers[f->trace(x, 3)]++;
        CHECK(fibers.size() == 8);
        for (auto [v, n] : fibers) {
            CHECK(n == 8);
            CHECK(f->frobenius(v, 3) == v);  // lands in the subfield
        }
    }

    SUBCASE("GF(2^d)-linearity and surjectivity onto the subfield") {
        auto sub = f->subfield(3);
        CHECK(sub.size() == 8);
        for (std::uint32_t c : sub)
            for (std::uint32_t x = 0; x < 64; x += 5)
                CHECK(f->trace(f->mul(c, x), 3) == f->mul(c, f->trace(x, 3)));
    }

    SUBCASE("ternary trace") {
        auto f27 = FieldTable::make(3, 3);
        std::map<std::uint32_t, int> fibers;
        for (std::uint32_t x = 0; x < 27; ++x) fibers[f27->trace(x, 1)]++;
        CHECK(fibers.size() == 3);
        for (auto [v, n] : fibers) CHECK(n == 9);
    }

    CHECK_THROWS_AS(f->trace(1, 4), std::invalid_argument);  // 4 does not divide 6
}

TEST_CASE("field elements and spec strings") {
    auto f = FieldTable::make(2, 6);
    FieldElement a{f->generator(), *f};
    CHECK((a * a.inverse()).code == 1);
    CHECK(a.pow(63).code == 1);
    auto g = FieldTable::make(3, 2);
    FieldElement b{1, *g};
    CHECK_THROWS_AS(a + b, std::invalid_argument);

    auto parsed = FieldTable::parse(f->spec_string());
    CHECK(parsed->q() == 64);
    CHECK(parsed->modulus() == f->modulus());
    CHECK(FieldTable::parse("2 6")->modulus() == f->modulus());
}
