#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cadet/am.hpp"
#include "cadet/constructions.hpp"
#include "cadet/repro.hpp"

using namespace cadet;
using namespace cadet::am;
using boolfn::VectorialFunction;
using code::LinearCode;
using gf::FieldTable;

namespace {

const constructions::ConstructionReport& vbent_code() {
    static const auto rep = constructions::code_from_vectorial([] {
        auto f = FieldTable::make(2, 6);
        return VectorialFunction::from_exponent(f, 3).scaled(f->generator()).traced_to(3);
    }());
    return rep;
}

const constructions::ConstructionReport& bent_code() {
    static const auto rep = constructions::code_from_bent_support([] {
        auto f = FieldTable::make(2, 6);
        return VectorialFunction::from_exponent(f, 3).scaled(f->generator()).traced_to(1);
    }());
    return rep;
}

}  // namespace

TEST_CASE("classic criterion") {
    // [8,4,4]: one weight in {1..5} against bound d_dual - t = 1.
    const auto eh = constructions::rm1(3);
    const auto rep = classic_am(eh, 3);
    CHECK(rep.verdict == Verdict::Yes);
    CHECK(rep.d == 4);
    CHECK(rep.d_dual == 4);
    CHECK(rep.simple_w == 8);

    // The [64,10] code has three weights in range but d_dual - t = 2.
    const auto no = classic_am(vbent_code().code, 2);
    CHECK(no.verdict == Verdict::No);
    CHECK(no.d_dual == 4);

    // The [36,7] bent-support code passes with equality (2 weights vs 2).
    CHECK(classic_am(bent_code().code, 2).verdict == Verdict::Yes);

    // Preconditions: t must stay under min(d, d_dual).
    auto f2 = FieldTable::make(2, 1);
    auto repcode = LinearCode::from_rows(f2, {{1, 1, 1, 1}});
    CHECK_THROWS_AS(classic_am(repcode, 2), std::invalid_argument);  // d_dual = 2
}

TEST_CASE("generalized criterion accepts where the classic one fails") {
    const auto rep = generalized_am(vbent_code().code, 2, {28, 36});
    CHECK(rep.verdict == Verdict::Yes);
    CHECK(rep.s_set == std::vector<unsigned>{28, 36});
    // The audit sets S_t' grow with the tail range.
    CHECK(rep.derived_s_sets.at(2) == std::vector<unsigned>{28, 36});
    CHECK(rep.derived_s_sets.at(1) == std::vector<unsigned>{28, 36, 63});
    bool verified_32 = false;
    for (const auto& f : rep.facts)
        if (f.name == "primal_design_w=32") {
            verified_32 = true;
            CHECK(f.ok);
            CHECK(f.value == "lambda=31");
        }
    CHECK(verified_32);
}

TEST_CASE("generalized criterion on the kasami code, with conclusion checks") {
    const auto& code = constructions::code_from_vectorial(boolfn::kasami(5, 2).f).code;
    const auto rep = generalized_am(code, 2, {12, 20});
    CHECK(rep.verdict == Verdict::Yes);

    // Agreement: a Yes verdict means every populated weight really carries
    // a 2-design; nu = 32 is small enough to check all of them.
    const auto wd = code.weight_distribution();
    for (unsigned w = 1; w <= 32; ++w) {
        if (wd.counts[w] == 0) continue;
        const auto d = designs::support_design(code, w);
        CHECK(designs::is_t_design(d, 2).has_value());
    }
    // Same for the dual.
    const auto dual = code.dual();
    const auto dwd = dual.weight_distribution();
    for (unsigned w = 1; w <= 32; ++w) {
        if (dwd.counts[w] == 0) continue;
        const auto d = designs::support_design(dual, w);
        CHECK(designs::is_t_design(d, 2).has_value());
    }
}

TEST_CASE("classic yes implies generalized yes with the weight set as S") {
    const auto eh = constructions::rm1(3);
    const auto classic = classic_am(eh, 3);
    REQUIRE(classic.verdict == Verdict::Yes);
    const auto gen = generalized_am(eh, 3, {4});
    CHECK(gen.verdict == Verdict::Yes);

    const auto bent_gen = generalized_am(bent_code().code, 2, {16, 20});
    CHECK(bent_gen.verdict == Verdict::Yes);
}

TEST_CASE("generalized criterion goes undecided when dual blocks are out of reach") {
    // S of size 3 forces a check of B_4(dual), but the dual has dimension 54.
    const auto rep = generalized_am(vbent_code().code, 2, {28, 32, 36});
    CHECK(rep.verdict == Verdict::Undecided);
}

TEST_CASE("generalized criterion accepts the ternary weight set") {
    // S may carry weights above nu-t (they are exempt regardless); the
    // larger S only tightens the dual-side requirement.
    const auto tern = constructions::ternary_code(3);
    const auto rep = generalized_am(tern.code, 2, {6, 9, 12});
    CHECK(rep.verdict == Verdict::Yes);
    bool steiner_checked = false;
    for (const auto& f : rep.facts)
        if (f.name == "dual_design_w=4") {
            steiner_checked = true;
            CHECK(f.ok);
            CHECK(f.value == "lambda=1");
        }
    CHECK(steiner_checked);
}

TEST_CASE("generalized criterion rejects bad S") {
    CHECK_THROWS_AS(generalized_am(vbent_code().code, 2, {5}), std::invalid_argument);
    CHECK_THROWS_AS(generalized_am(vbent_code().code, 2, {65}), std::invalid_argument);
}

TEST_CASE("characterization statements agree") {
    const auto eh = constructions::rm1(3);
    const auto rep = characterization(eh, 2);
    CHECK(rep.shortened_invariant);
    CHECK(rep.punctured_invariant);
    REQUIRE(rep.designs_primal.has_value());
    CHECK(*rep.designs_primal);
    REQUIRE(rep.designs_dual.has_value());  // self-dual, enumerable
    CHECK(*rep.designs_dual);
    CHECK(rep.consistent);
    CHECK(!rep.failing_weight.has_value());
}

TEST_CASE("characterization exhibits a failing weight on a random code") {
    const auto bad = repro::random_non_design_code(16, 5, 2, 0);
    CHECK(bad.length() == 16);
    CHECK(bad.dimension() == 5);
    const auto rep = characterization(bad, 2);
    CHECK(!rep.shortened_invariant);
    CHECK(!rep.punctured_invariant);
    REQUIRE(rep.designs_primal.has_value());
    CHECK(!*rep.designs_primal);
    REQUIRE(rep.failing_weight.has_value());
    // The witness weight really fails the design test.
    const auto d = designs::support_design(bad, *rep.failing_weight);
    CHECK(!designs::is_t_design(d, 2).has_value());
    CHECK(rep.consistent);
}
