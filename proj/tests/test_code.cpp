#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cadet/code.hpp"
#include "cadet/errors.hpp"
#include "cadet/moments.hpp"

using cadet::Int;
using cadet::code::LinearCode;
using cadet::code::WeightDistribution;
using cadet::gf::FieldPtr;
using cadet::gf::FieldTable;

namespace {

// Independent enumeration oracle: multiply every message by the generator
// rows directly, no packing, no Gray order.
WeightDistribution brute_force_wd(const LinearCode& c) {
    const auto& f = *c.field();
    const unsigned m = c.dimension(), nu = c.length();
    std::uint64_t space = 1;
    for (unsigned i = 0; i < m; ++i) space *= f.q();
    WeightDistribution wd;
    wd.nu = nu;
    wd.counts.assign(nu + 1, 0);
    for (std::uint64_t msg = 0; msg < space; ++msg) {
        std::vector<std::uint32_t> word(nu, 0);
        std::uint64_t v = msg;
        for (unsigned i = 0; i < m; ++i) {
            const auto digit = static_cast<std::uint32_t>(v % f.q());
            v /= f.q();
            if (digit)
                for (unsigned j = 0; j < nu; ++j)
                    word[j] = f.add(word[j], f.mul(digit, c.rows()[i][j]));
        }
        unsigned w = 0;
        for (auto s : word) w += s != 0;
        wd.counts[w] += 1;
    }
    return wd;
}

LinearCode random_code(FieldPtr f, unsigned nu, unsigned rows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint32_t>> g(rows, std::vector<std::uint32_t>(nu));
    for (auto& row : g)
        for (auto& v : row) v = static_cast<std::uint32_t>(rng() % f->q());
    return LinearCode::from_rows(std::move(f), g);
}

const std::vector<std::vector<std::uint32_t>> kHamming74 = {
    {1, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 1, 1, 1, 1},
};

}  // namespace

TEST_CASE("construction basics") {
    auto f2 = FieldTable::make(2, 1);
    auto full = LinearCode::from_rows(f2, {{1, 0}, {0, 1}});
    CHECK(full.dimension() == 2);
    auto rep = LinearCode::from_rows(f2, {{1, 1, 1, 1}});
    CHECK(rep.dimension() == 1);
    CHECK(rep.minimum_distance() == 4);
    auto dep = LinearCode::from_rows(f2, {{1, 1, 0}, {1, 1, 0}});
    CHECK(dep.dimension() == 1);

    CHECK_THROWS_AS(LinearCode::from_rows(f2, {}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode::from_rows(f2, {{1, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(LinearCode::from_rows(f2, {{2, 0}}), std::invalid_argument);
}

TEST_CASE("weight distributions match the brute-force oracle") {
    auto f2 = FieldTable::make(2, 1);
    auto f3 = FieldTable::make(3, 1);
    auto f4 = FieldTable::make(2, 2);
    auto f5 = FieldTable::make(5, 1);

    const LinearCode codes[] = {
        LinearCode::from_rows(f2, kHamming74),
        random_code(f2, 12, 6, 1),
        random_code(f3, 6, 3, 2),
        random_code(f3, 9, 4, 3),
        random_code(f4, 5, 2, 4),
        random_code(f5, 4, 2, 5),
    };
    for (const auto& c : codes) {
        const auto fast = c.weight_distribution();
        const auto slow = brute_force_wd(c);
        CHECK(fast == slow);
        CHECK(fast.total() == c.size());  // sum A_i = q^m
        CHECK(fast.counts[0] == 1);
    }
}

TEST_CASE("repetition code facts") {
    auto f2 = FieldTable::make(2, 1);
    auto rep = LinearCode::from_rows(f2, {{1, 1, 1, 1}});
    auto wd = rep.weight_distribution();
    CHECK(wd.counts[0] == 1);
    CHECK(wd.counts[4] == 1);
    CHECK(wd.enumerator() == "1+z^4");

    auto dual = rep.dual();
    CHECK(dual.dimension() == 3);
    auto dwd = dual.weight_distribution();
    CHECK(dwd.counts == std::vector<Int>{1, 0, 6, 0, 1});
}

TEST_CASE("dual is an involution and kills the full code") {
    auto f2 = FieldTable::make(2, 1);
    auto f3 = FieldTable::make(3, 1);
    for (const auto& c : {LinearCode::from_rows(f2, kHamming74), random_code(f3, 8, 4, 7),
                          random_code(f2, 10, 3, 8)}) {
        CHECK(c.dual().dual().same_row_space(c));
        // Orthogonality of every generator pair.
        const auto d = c.dual();
        CHECK(d.dimension() == c.length() - c.dimension());
        for (const auto& r : c.rows())
            for (const auto& s : d.rows()) {
                std::uint32_t acc = 0;
                for (unsigned j = 0; j < c.length(); ++j)
                    acc = c.field()->add(acc, c.field()->mul(r[j], s[j]));
                CHECK(acc == 0);
            }
    }
    auto full = LinearCode::from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(full.dual().dimension() == 0);
    CHECK(full.dual().weight_distribution().counts == std::vector<Int>{1, 0, 0, 0});
}

TEST_CASE("shorten and puncture") {
    auto f2 = FieldTable::make(2, 1);
    auto ham = LinearCode::from_rows(f2, kHamming74);

    CHECK(ham.shortened({}).same_row_space(ham));
    CHECK(ham.punctured({}).same_row_space(ham));

    // Shortening drops the dimension by |T| while T stays below min(d, d_dual).
    auto sh = ham.shortened({0, 3});
    CHECK(sh.length() == 5);
    CHECK(sh.dimension() == 2);
    auto pu = ham.punctured({2});
    CHECK(pu.length() == 6);
    CHECK(pu.dimension() == 4);

    CHECK_THROWS_AS(ham.shortened({9}), std::invalid_argument);
}

TEST_CASE("shorten/puncture duality for all small T") {
    auto f2 = FieldTable::make(2, 1);
    auto f3 = FieldTable::make(3, 1);
    const LinearCode codes[] = {LinearCode::from_rows(f2, kHamming74), random_code(f3, 8, 4, 11),
                                random_code(f2, 9, 4, 12)};
    for (const auto& c : codes) {
        const auto dual = c.dual();
        std::vector<std::vector<unsigned>> tsets;
        const unsigned nu = c.length();
        for (unsigned a = 0; a < nu; ++a) {
            tsets.push_back({a});
            for (unsigned b = a + 1; b < nu; ++b) {
                tsets.push_back({a, b});
                for (unsigned d = b + 1; d < nu; ++d) tsets.push_back({a, b, d});
            }
        }
        for (const auto& t : tsets) {
            CHECK(c.shortened(t).dual().same_row_space(dual.punctured(t)));
            CHECK(c.punctured(t).dual().same_row_space(dual.shortened(t)));
        }
    }
}

TEST_CASE("partitioned enumeration agrees with the dual transform") {
    // 2^24 messages crosses the multi-thread threshold; the dual has
    // dimension 1, so its two codewords pin the primal distribution exactly
    // through the transform.
    std::mt19937_64 rng(17);
    std::vector<std::vector<std::uint32_t>> rows(24, std::vector<std::uint32_t>(25, 0));
    for (unsigned i = 0; i < 24; ++i) {
        rows[i][i] = 1;
        rows[i][24] = static_cast<std::uint32_t>(rng() & 1);
    }
    auto c = LinearCode::from_rows(FieldTable::make(2, 1), rows);
    REQUIRE(c.dimension() == 24);
    const auto fast = c.weight_distribution();
    const auto dual_wd = c.dual().weight_distribution();
    const auto via_dual = cadet::moments::macwilliams_dual(dual_wd, 1, 2);
    CHECK(fast == via_dual);
}

TEST_CASE("budget guard") {
    auto f2 = FieldTable::make(2, 1);
    std::vector<std::vector<std::uint32_t>> rows(30, std::vector<std::uint32_t>(32, 0));
    for (unsigned i = 0; i < 30; ++i) rows[i][i] = 1;
    auto big = LinearCode::from_rows(f2, rows);
    CHECK_THROWS_AS(big.weight_distribution(1u << 20), cadet::BudgetError);
}

TEST_CASE("supports of fixed weight") {
    auto f2 = FieldTable::make(2, 1);
    auto ham = LinearCode::from_rows(f2, kHamming74);
    auto sup = ham.supports_of_weight(3);
    CHECK(sup.size() == 7);
    for (const auto& s : sup) CHECK(s.size() == 3);
    CHECK(ham.supports_of_weight(1).empty());
}

TEST_CASE("griesmer bound") {
    CHECK(cadet::code::griesmer_length_bound(6, 16, 2) == 32);  // 16+8+4+2+1+1
    CHECK(cadet::code::griesmer_length_bound(1, 9, 2) == 9);
    CHECK(cadet::code::max_griesmer_d(35, 6, 2) == 16);
    CHECK(cadet::code::max_griesmer_d(32, 6, 2) == 16);
    CHECK(cadet::code::max_griesmer_d(31, 6, 2) == 15);
}

TEST_CASE("text format round trip") {
    auto f3 = FieldTable::make(3, 1);
    auto c = random_code(f3, 7, 3, 21);
    auto back = LinearCode::from_text(c.to_text());
    CHECK(back.same_row_space(c));
    CHECK(back.field()->q() == 3);
    CHECK_THROWS_AS(LinearCode::from_text("nonsense"), std::invalid_argument);
}
