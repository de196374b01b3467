#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mult/graded.hpp"
#include "mult/harness.hpp"
#include "mult/newton.hpp"

using namespace mult;

namespace {

GradedSystem cusp_powers(unsigned p_max) {
    return powers_system(MonomialIdeal::make(2, {{2, 0}, {0, 3}}), p_max);
}

}  // namespace

TEST_CASE("powers system is valid and multiplicative") {
    const GradedSystem s = cusp_powers(4);
    CHECK(validate(s).empty());
    CHECK(s.at(1) == MonomialIdeal::make(2, {{2, 0}, {0, 3}}));
    CHECK(s.at(4) == power(s.at(1), 4));
    CHECK(s.at(2) == product(s.at(1), s.at(1)));
    CHECK_THROWS_AS(s.at(0), std::out_of_range);
    CHECK_THROWS_AS(s.at(5), std::out_of_range);
}

TEST_CASE("validate reports broken systems") {
    GradedSystem s = cusp_powers(3);
    s.members[2] = MonomialIdeal::make(2, {{5, 5}});  // a_1^2 no longer fits inside
    CHECK_FALSE(validate(s).empty());

    GradedSystem zeroed = cusp_powers(2);
    zeroed.members[1] = MonomialIdeal::zero(2);
    CHECK_FALSE(validate(zeroed).empty());

    GradedSystem empty;
    empty.arity = 2;
    empty.p_max = 0;
    CHECK_FALSE(validate(empty).empty());
}

TEST_CASE("sum of graded systems is again a graded system") {
    const GradedSystem a = cusp_powers(4);
    const GradedSystem b = powers_system(MonomialIdeal::make(2, {{1, 1}}), 4);
    const GradedSystem c = sum_systems(a, b);
    CHECK(validate(c).empty());
    for (unsigned p = 1; p <= 4; ++p) {
        CHECK(contains(c.at(p), a.at(p)));
        CHECK(contains(c.at(p), b.at(p)));
    }
    CHECK(contains(c.at(2), product(a.at(1), b.at(1))));
}

TEST_CASE("asymptotic member of a powers system stabilizes immediately") {
    const GradedSystem s = cusp_powers(4);
    const AsymptoticResult r =
        asymptotic_multiplier_ideal(s, 1, make_rational(5, 6), 4);
    CHECK(r.conclusive);
    CHECK(r.stabilized);
    CHECK(r.ideal == MonomialIdeal::make(2, {{1, 0}, {0, 1}}));

    // power scaling collapses every member to the q = 1 value
    AsymptoticEvaluator eval(s, 1, 4);
    for (unsigned q = 1; q <= 4; ++q) {
        CHECK(multiplier_ideal(eval.level_ideal(q), make_rational(5, 6) / q) == r.ideal);
    }
}

TEST_CASE("asymptotic members at a higher level") {
    const GradedSystem s = cusp_powers(4);
    const AsymptoticResult r2 = asymptotic_multiplier_ideal(s, 2, make_rational(5, 12), 2);
    const AsymptoticResult r1 = asymptotic_multiplier_ideal(s, 1, make_rational(5, 6), 4);
    CHECK(r2.conclusive);
    CHECK(r2.stabilized);
    CHECK(r2.ideal == r1.ideal);
}

TEST_CASE("truncation can see the maximum without certifying it") {
    GradedSystem s;
    s.arity = 1;
    s.p_max = 2;
    s.members = {MonomialIdeal::make(1, {{2}}), MonomialIdeal::make(1, {{3}})};
    REQUIRE(validate(s).empty());
    const AsymptoticResult r = asymptotic_multiplier_ideal(s, 1, Rational(1), 2);
    CHECK(r.conclusive);
    CHECK_FALSE(r.stabilized);
    CHECK(r.ideal == MonomialIdeal::make(1, {{1}}));
}

TEST_CASE("truncation with incomparable members is inconclusive") {
    GradedSystem s;
    s.arity = 2;
    s.p_max = 3;
    s.members = {MonomialIdeal::make(2, {{2, 5}}), MonomialIdeal::make(2, {{3, 0}}),
                 MonomialIdeal::make(2, {{0, 5}})};
    REQUIRE(validate(s).empty());
    const AsymptoticResult r = asymptotic_multiplier_ideal(s, 1, Rational(1), 3);
    CHECK_FALSE(r.conclusive);
}

TEST_CASE("evaluator rejects out-of-range parameters") {
    const GradedSystem s = cusp_powers(4);
    CHECK_THROWS_AS(AsymptoticEvaluator(s, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_multiplier_ideal(s, 1, Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_multiplier_ideal(s, 3, Rational(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_multiplier_ideal(s, 1, Rational(-1), 2), std::invalid_argument);
}
