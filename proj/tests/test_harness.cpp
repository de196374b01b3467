#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mult/graded.hpp"
#include "mult/harness.hpp"
#include "mult/newton.hpp"
#include "mult/oracles.hpp"
#include "mult/parser.hpp"

#include <algorithm>

using namespace mult;

namespace {

MonomialIdeal one_var(unsigned e) { return MonomialIdeal::make(1, {{e}}); }

bool has_sample(const AlphaSamples& s, const Rational& v) {
    return std::find(s.values.begin(), s.values.end(), v) != s.values.end();
}

}  // namespace

TEST_CASE("critical alpha samples pick up both factors' breakpoints") {
    const MonomialIdeal a = MonomialIdeal::make(2, {{2, 0}});
    const MonomialIdeal b = MonomialIdeal::make(2, {{0, 3}});
    const Rational gamma = make_rational(5, 6);
    const AlphaSamples s = critical_alphas(a, b, gamma);

    CHECK(has_sample(s, Rational(0)));
    CHECK(has_sample(s, gamma));
    CHECK(has_sample(s, make_rational(1, 2)));   // jump of a
    CHECK(has_sample(s, make_rational(1, 6)));   // gamma minus jump 2/3 of b
    CHECK(std::is_sorted(s.values.begin(), s.values.end()));
    for (const Rational& v : s.values) {
        CHECK(v >= 0);
        CHECK(v <= gamma);
    }
}

TEST_CASE("densifying the samples never changes the finite sum") {
    SplitMix64 rng(0xdada1234u);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t arity = 1 + rng.below(2);
        const MonomialIdeal a = random_ideal(rng, arity, 3, 4);
        const MonomialIdeal b = random_ideal(rng, arity, 3, 4);
        const Rational gamma = random_gamma(rng, 2, 6);
        const AlphaSamples base = critical_alphas(a, b, gamma);
        const AlphaSamples dense = densify(base);
        CHECK(dense.values.size() >= base.values.size());
        CHECK(finite_sum(a, b, gamma) == finite_sum_with_samples(a, b, gamma, dense));
    }
}

TEST_CASE("finite sum at a hand-checked pair") {
    const MonomialIdeal a = MonomialIdeal::make(2, {{2, 0}});
    const MonomialIdeal b = MonomialIdeal::make(2, {{0, 3}});
    const MonomialIdeal s = finite_sum(a, b, make_rational(5, 6));
    CHECK(s == MonomialIdeal::make(2, {{1, 0}, {0, 1}}));
    CHECK(s == finite_sum_grid(a, b, make_rational(5, 6)));
}

TEST_CASE("sum inclusion on the strict pinned instance") {
    const MonomialIdeal m = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    const VerificationReport r = verify_sum_inclusion(m, m, Rational(2));
    CHECK(r.verdict == Verdict::Holds);
    REQUIRE(r.lhs_ideals.size() == 1);
    REQUIRE(r.rhs_ideals.size() == 1);
    CHECK(r.lhs_ideals[0] == m);
    CHECK(r.rhs_ideals[0].is_unit());
}

TEST_CASE("sum inclusion detects a planted violation") {
    // gamma = 0 makes both sides the unit ideal; equality, never a failure
    const MonomialIdeal m = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    CHECK(verify_sum_inclusion(m, m, Rational(0)).verdict == Verdict::HoldsWithEquality);
}

TEST_CASE("product equality across disjoint blocks") {
    const VerificationReport r =
        verify_product_equality(one_var(2), one_var(3), make_rational(5, 6));
    CHECK(r.verdict == Verdict::HoldsWithEquality);
    REQUIRE(!r.lhs_ideals.empty());
    CHECK(r.lhs_ideals[0] == MonomialIdeal::make(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("sum equals intersection on the product ring") {
    const VerificationReport r =
        verify_sum_equals_intersection(one_var(2), one_var(3), make_rational(5, 6));
    CHECK(r.verdict == Verdict::HoldsWithEquality);
    REQUIRE(!r.lhs_ideals.empty());
    CHECK(r.lhs_ideals[0] == MonomialIdeal::make(2, {{1, 0}, {0, 1}}));

    CHECK(verify_sum_equals_intersection(one_var(1), one_var(1), Rational(0)).verdict ==
          Verdict::HoldsWithEquality);
    CHECK(verify_sum_equals_intersection(one_var(1), one_var(1), Rational(2)).verdict ==
          Verdict::HoldsWithEquality);
}

TEST_CASE("main inclusion with power families") {
    IdealFamily fa, fb;
    const MonomialIdeal a = MonomialIdeal::make(2, {{2, 0}});
    const MonomialIdeal b = MonomialIdeal::make(2, {{0, 3}});
    for (unsigned i = 1; i <= 2; ++i) {
        fa.members.emplace(i, power(a, i));
        fb.members.emplace(i, power(b, i));
    }
    const VerificationReport r =
        verify_main_inclusion(fa, fb, 2, 2, make_rational(5, 3), false);
    CHECK(r.verdict != Verdict::Fails);
}

TEST_CASE("main inclusion at m = n = 1 matches plain sum inclusion") {
    SplitMix64 rng(0x600df00du);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t arity = 1 + rng.below(2);
        const MonomialIdeal a = random_ideal(rng, arity, 3, 4);
        const MonomialIdeal b = random_ideal(rng, arity, 3, 4);
        const Rational gamma = random_gamma(rng, 2, 6);
        IdealFamily fa, fb;
        fa.members.emplace(1, a);
        fb.members.emplace(1, b);
        const VerificationReport joint = verify_main_inclusion(fa, fb, 1, 1, gamma, false);
        const VerificationReport plain = verify_sum_inclusion(a, b, gamma);
        CHECK(joint.verdict == plain.verdict);
        REQUIRE(!joint.lhs_ideals.empty());
        REQUIRE(!plain.lhs_ideals.empty());
        CHECK(joint.lhs_ideals[0] == plain.lhs_ideals[0]);
        CHECK(joint.rhs_ideals[0] == plain.rhs_ideals[0]);
    }
}

TEST_CASE("main inclusion rejects families missing the hypothesis") {
    IdealFamily fa, fb;
    fa.members.emplace(1, MonomialIdeal::make(1, {{1}}));
    fa.members.emplace(2, MonomialIdeal::make(1, {{5}}));  // a_1^2 not inside a_2
    fb.members.emplace(1, MonomialIdeal::make(1, {{1}}));
    fb.members.emplace(2, MonomialIdeal::make(1, {{2}}));
    CHECK_THROWS_AS(verify_main_inclusion(fa, fb, 2, 2, Rational(1), false),
                    std::invalid_argument);
}

TEST_CASE("asymptotic statement on powers systems") {
    const GradedSystem a = powers_system(MonomialIdeal::make(2, {{2, 0}}), 2);
    const GradedSystem b = powers_system(MonomialIdeal::make(2, {{0, 3}}), 2);
    const VerificationReport r = verify_asymptotic(a, b, 1, make_rational(5, 6), 2);
    CHECK((r.verdict == Verdict::Holds || r.verdict == Verdict::HoldsWithEquality));
    CHECK(r.verdict != Verdict::Inconclusive);
}

TEST_CASE("asymptotic statement reports truncation failures as inconclusive") {
    GradedSystem tricky;
    tricky.arity = 2;
    tricky.p_max = 3;
    tricky.members = {MonomialIdeal::make(2, {{2, 5}}), MonomialIdeal::make(2, {{3, 0}}),
                      MonomialIdeal::make(2, {{0, 5}})};
    REQUIRE(validate(tricky).empty());
    const GradedSystem other = powers_system(MonomialIdeal::make(2, {{1, 1}}), 3);
    const VerificationReport r = verify_asymptotic(tricky, other, 1, Rational(1), 3);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(!r.note.empty());
}

TEST_CASE("approximation statement at hand-checked instances") {
    const MonomialIdeal cusp = MonomialIdeal::make(2, {{2, 0}, {0, 3}});
    CHECK(verify_approximation(cusp, 4, make_rational(5, 6), make_rational(1, 2)).verdict !=
          Verdict::Fails);
    // p*eps below the arity forces a unit right side
    const VerificationReport trivial =
        verify_approximation(cusp, 1, Rational(1), make_rational(1, 2));
    CHECK(trivial.verdict != Verdict::Fails);
    REQUIRE(!trivial.rhs_ideals.empty());
    CHECK(trivial.rhs_ideals[0].is_unit());
    CHECK(verify_approximation(one_var(1), 2, Rational(1), Rational(1)).verdict !=
          Verdict::Fails);
}

TEST_CASE("subvariety restriction in the coordinate case") {
    const MonomialIdeal b = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    const VerificationReport r = verify_subvariety(b, 1, make_rational(1, 2));
    CHECK(r.verdict == Verdict::HoldsWithEquality);
    REQUIRE(!r.lhs_ideals.empty());
    CHECK(r.lhs_ideals[0].is_unit());

    // the subspace ideal itself is excluded: containment must be strict
    const MonomialIdeal plane = MonomialIdeal::make(2, {{0, 1}});
    CHECK_THROWS_AS(verify_subvariety(plane, 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("extending by a coordinate subspace") {
    const MonomialIdeal a = one_var(2);
    const MonomialIdeal e = extend_by_coordinate_subspace(a, 1);
    CHECK(e == MonomialIdeal::make(2, {{2, 0}, {0, 1}}));
}

TEST_CASE("jump shift across added variables") {
    const MonomialIdeal cusp = MonomialIdeal::make(2, {{2, 0}, {0, 3}});
    const VerificationReport r = verify_jumping_shift(cusp, 1, make_rational(4, 3));
    CHECK(r.verdict == Verdict::Holds);
    const std::vector<Rational> expected{make_rational(11, 6), make_rational(13, 6),
                                         make_rational(7, 3)};
    CHECK(r.lhs_values == expected);
    CHECK(r.rhs_values == expected);
}

TEST_CASE("random trials are deterministic in all fields") {
    const TheoremId ids[] = {TheoremId::SumInclusion,   TheoremId::AsymptoticSum,
                             TheoremId::ProductEquality, TheoremId::MainInclusion,
                             TheoremId::SumIntersection, TheoremId::Approximation,
                             TheoremId::Subvariety,      TheoremId::JumpShift};
    for (TheoremId id : ids) {
        const VerificationReport first = random_trial(id, 99, 1);
        const VerificationReport second = random_trial(id, 99, 1);
        CHECK(first.instance == second.instance);
        CHECK(first.verdict == second.verdict);
        CHECK(first.lhs_ideals == second.lhs_ideals);
        CHECK(first.rhs_ideals == second.rhs_ideals);
        CHECK(first.lhs_values == second.lhs_values);
        CHECK(first.rhs_values == second.rhs_values);
        const VerificationReport other = random_trial(id, 100, 1);
        CHECK(other.verdict != Verdict::Fails);
    }
}

TEST_CASE("rendered ideals reparse to the same ideal") {
    SplitMix64 rng(0x0ddba11u);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t arity = 1 + rng.below(3);
        const MonomialIdeal a = random_ideal(rng, arity, 4, 6);
        const std::vector<std::string> names = default_var_names(arity);
        CHECK(parse_ideal(render_ideal(a, names), names) == a);
    }
    CHECK(parse_ideal(render_ideal(MonomialIdeal::zero(2)), default_var_names(2)).is_zero());
    CHECK(parse_ideal(render_ideal(MonomialIdeal::unit(2)), default_var_names(2)).is_unit());
}
