#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mult/harness.hpp"
#include "mult/monomial.hpp"

using namespace mult;

namespace {

MonomialIdeal ideal2(std::vector<Exponent> gens) { return MonomialIdeal::make(2, std::move(gens)); }

}  // namespace

TEST_CASE("construction minimalizes and canonicalizes") {
    const MonomialIdeal a = ideal2({{2, 0}, {3, 1}});
    REQUIRE(a.generators().size() == 1);
    CHECK(a.generators()[0] == Exponent{2, 0});

    const MonomialIdeal b = ideal2({{0, 1}, {1, 0}, {1, 1}});
    REQUIRE(b.generators().size() == 2);
    CHECK(b.generators()[0] == Exponent{1, 0});
    CHECK(b.generators()[1] == Exponent{0, 1});

    CHECK(ideal2({{2, 0}, {2, 0}}) == ideal2({{2, 0}}));
}

TEST_CASE("zero and unit ideals") {
    const MonomialIdeal z = MonomialIdeal::zero(2);
    const MonomialIdeal u = MonomialIdeal::unit(2);
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_unit());
    CHECK(u.is_unit());
    CHECK_FALSE(u.is_proper());
    CHECK(ideal2({{0, 0}}).is_unit());
    CHECK(ideal2({{1, 0}}).is_proper());
}

TEST_CASE("membership and containment") {
    const MonomialIdeal a = ideal2({{1, 0}});
    CHECK(contains_monomial(a, {2, 0}));
    CHECK(contains_monomial(a, {1, 3}));
    CHECK_FALSE(contains_monomial(a, {0, 5}));

    CHECK(contains(a, ideal2({{2, 0}})));
    CHECK_FALSE(contains(ideal2({{2, 0}}), a));
    CHECK(contains(MonomialIdeal::unit(2), a));
    CHECK(contains(a, MonomialIdeal::zero(2)));
}

TEST_CASE("sum product intersect power") {
    const MonomialIdeal x2 = ideal2({{2, 0}});
    const MonomialIdeal y3 = ideal2({{0, 3}});
    CHECK(sum(x2, y3) == ideal2({{2, 0}, {0, 3}}));
    CHECK(product(x2, y3) == ideal2({{2, 3}}));
    CHECK(intersect(x2, y3) == ideal2({{2, 3}}));

    const MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
    CHECK(power(m, 0) == MonomialIdeal::unit(2));
    CHECK(power(m, 2) == ideal2({{2, 0}, {1, 1}, {0, 2}}));
    CHECK(power(m, 3) == max_ideal_power(2, 3));

    // (x^2, y^3) sits inside (x, y), so intersecting returns it unchanged
    CHECK(intersect(ideal2({{2, 0}, {0, 3}}), m) == ideal2({{2, 0}, {0, 3}}));
}

TEST_CASE("maximal ideal powers") {
    CHECK(max_ideal_power(2, 0) == MonomialIdeal::unit(2));
    CHECK(max_ideal_power(2, -3) == MonomialIdeal::unit(2));
    CHECK(max_ideal_power(1, 4) == MonomialIdeal::make(1, {{4}}));
    CHECK(max_ideal_power(3, 1).generators().size() == 3);
    CHECK(max_ideal_power(2, 3).generators().size() == 4);
    CHECK(max_ideal_power(4, 4).generators().size() == 35);
}

TEST_CASE("product and zero conventions") {
    const MonomialIdeal z = MonomialIdeal::zero(2);
    const MonomialIdeal a = ideal2({{2, 0}});
    CHECK(product(z, a).is_zero());
    CHECK(sum(z, a) == a);
    CHECK(intersect(z, a).is_zero());
}

TEST_CASE("embedding into a larger ring") {
    const MonomialIdeal a = MonomialIdeal::make(1, {{2}});
    const MonomialIdeal left = embed_product(a, 0, 3);
    REQUIRE(left.arity() == 3);
    CHECK(left == MonomialIdeal::make(3, {{2, 0, 0}}));
    const MonomialIdeal right = embed_product(a, 2, 3);
    CHECK(right == MonomialIdeal::make(3, {{0, 0, 2}}));
}

TEST_CASE("restriction to a coordinate subspace") {
    const MonomialIdeal b = ideal2({{2, 0}, {0, 1}, {1, 3}});
    // keeping the first variable: y and x*y^3 restrict to zero
    const MonomialIdeal r = restrict_to_subspace(b, {0});
    CHECK(r == MonomialIdeal::make(1, {{2}}));

    const MonomialIdeal both = restrict_to_subspace(b, {0, 1});
    CHECK(both == b);

    const MonomialIdeal none = restrict_to_subspace(ideal2({{1, 1}}), {0});
    CHECK(none.is_zero());
}

TEST_CASE("arity mismatches are rejected") {
    CHECK_THROWS_AS(MonomialIdeal::make(2, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(sum(MonomialIdeal::unit(1), MonomialIdeal::unit(2)), std::invalid_argument);
}

TEST_CASE("algebraic laws on random ideals") {
    SplitMix64 rng(0x5eed5eedu);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t arity = 1 + rng.below(3);
        const MonomialIdeal a = random_ideal(rng, arity, 3, 5);
        const MonomialIdeal b = random_ideal(rng, arity, 3, 5);
        const MonomialIdeal c = random_ideal(rng, arity, 2, 4);

        CHECK(contains(intersect(a, b), product(a, b)));
        CHECK(contains(a, intersect(a, b)));
        CHECK(contains(sum(a, b), a));
        CHECK(sum(a, b) == sum(b, a));
        CHECK(product(a, b) == product(b, a));
        CHECK(product(sum(a, b), c) == sum(product(a, c), product(b, c)));
        CHECK(power(a, 2) == product(a, a));
    }
}
