#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "sdepth/monomial.hpp"

using namespace sdepth;
using sdepth::testing::ideal;
using sdepth::testing::mono;
using sdepth::testing::random_monomial;

TEST_CASE("divisibility") {
    CHECK(divides(mono({1, 0}), mono({1, 1})));       // x1 | x1x2
    CHECK_FALSE(divides(mono({2}), mono({1})));       // x1^2 does not divide x1
    const Monomial u = mono({1, 2, 0, 3});
    CHECK(divides(u, u));
    CHECK_THROWS_AS(divides(mono({1}), mono({1, 0})), std::invalid_argument);
}

TEST_CASE("quotient by gcd") {
    // (x1x2^2) / gcd with x1x2x3 = x2
    CHECK(quotient_by_gcd(mono({1, 2, 0}), mono({1, 1, 1})) == mono({0, 1, 0}));
    const Monomial u = mono({2, 0, 1});
    CHECK(quotient_by_gcd(u, Monomial::unit(3)) == u);
    // (x2x3x4) / gcd with x3x4x5 = x2
    CHECK(quotient_by_gcd(mono({0, 1, 1, 1, 0}), mono({0, 0, 1, 1, 1})) == mono({0, 1, 0, 0, 0}));
}

TEST_CASE("gcd, lcm, product") {
    CHECK(gcd(mono({3, 1}), mono({1, 4})) == mono({1, 1}));
    CHECK(lcm(mono({3, 1}), mono({1, 4})) == mono({3, 4}));
    CHECK(mono({1, 2}) * mono({2, 0}) == mono({3, 2}));
}

TEST_CASE("ideal construction minimizes to the unique generating set") {
    const MonomialIdeal I = ideal(2, {{1, 0}, {1, 1}, {2, 0}});
    CHECK(I.generators() == std::vector<Monomial>{mono({1, 0})});
    CHECK_THROWS_AS(MonomialIdeal(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(ideal(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("membership") {
    CHECK(contains(ideal(2, {{2, 0}, {0, 1}}), mono({1, 2})));  // x2 | x1x2^2
    CHECK_FALSE(contains(ideal(1, {{2}}), mono({1})));
    CHECK(contains(ideal(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}), mono({0, 1, 1, 1, 1})));
}

TEST_CASE("colon by a monomial") {
    const MonomialIdeal I = ideal(5, {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}});
    const IdealOrUnit c = colon(I, Monomial::variable(5, 4));
    REQUIRE_FALSE(c.is_unit());
    CHECK(c.ideal() == ideal(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}));

    CHECK(colon(ideal(1, {{2}}), mono({1})).ideal() == ideal(1, {{1}}));

    const IdealOrUnit unit_case = colon(ideal(2, {{2, 0}, {1, 2}}), mono({1, 2}));
    CHECK(unit_case.is_unit());
    CHECK_THROWS_AS(unit_case.ideal(), std::logic_error);
}

TEST_CASE("adding monomials") {
    const MonomialIdeal I = ideal(4, {{2, 0, 0, 0}, {1, 2, 0, 0}, {1, 1, 2, 0}});
    const IdealOrUnit sum = add(I, Monomial::variable(4, 1));
    REQUIRE_FALSE(sum.is_unit());
    CHECK(sum.ideal() == ideal(4, {{2, 0, 0, 0}, {0, 1, 0, 0}}));

    // absorption: adding an element of I changes nothing
    CHECK(add(I, mono({2, 1, 0, 0})).ideal() == I);

    CHECK(add(ideal(3, {{1, 1, 0}}), Monomial::variable(3, 2)).ideal() ==
          ideal(3, {{1, 1, 0}, {0, 0, 1}}));

    CHECK(add(I, Monomial::unit(4)).is_unit());
}

TEST_CASE("dropping a variable re-indexes") {
    const MonomialIdeal I = ideal(4, {{1, 1, 0, 0}, {0, 1, 0, 1}});
    CHECK(drop_variable(I, 2) == ideal(3, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(drop_variable(ideal(3, {{0, 2, 0}}), 2) == ideal(2, {{0, 2}}));
    CHECK(drop_variable(ideal(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}), 4) ==
          ideal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK_THROWS_AS(drop_variable(I, 1), std::invalid_argument);
}

TEST_CASE("minimization is idempotent and order-independent") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 200; ++round) {
        std::vector<Monomial> gens;
        const int n = 1 + static_cast<int>(rng() % 4);
        const int count = 1 + static_cast<int>(rng() % 6);
        for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n, 4));

        const std::vector<Monomial> minimal = minimize_generators(gens);
        CHECK(minimize_generators(minimal) == minimal);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimize_generators(gens) == minimal);
    }
}

namespace {

// Membership of x^a in a possibly-unit ideal.
bool member(const IdealOrUnit& I, const Monomial& a) {
    return I.is_unit() || contains(I.ideal(), a);
}

} // namespace

TEST_CASE("colon grows the ideal and composes multiplicatively") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n, 3));
        if (minimize_generators(gens).front().is_unit()) continue;
        const MonomialIdeal I(n, gens);
        const Monomial u = random_monomial(rng, n, 2);
        const Monomial v = random_monomial(rng, n, 2);

        const IdealOrUnit cu = colon(I, u);
        // (I : u) contains I
        for (const Monomial& g : I.generators()) CHECK(member(cu, g));

        // ((I : u) : v) == (I : uv), compared on a bounding box
        const IdealOrUnit lhs = cu.is_unit() ? cu : colon(cu.ideal(), v);
        const IdealOrUnit rhs = colon(I, u * v);
        Exponents box = I.exponent_caps();
        for (int j = 0; j < n; ++j)
            box[static_cast<size_t>(j)] += u.exponent(j) + v.exponent(j) + 1;
        Exponents a(static_cast<size_t>(n), 0);
        bool same = true;
        while (true) {
            const Monomial q(a);
            same = same && (member(lhs, q) == member(rhs, q));
            int j = n - 1;
            while (j >= 0 && a[static_cast<size_t>(j)] == box[static_cast<size_t>(j)])
                a[static_cast<size_t>(j--)] = 0;
            if (j < 0) break;
            ++a[static_cast<size_t>(j)];
        }
        CHECK(same);
    }
}

TEST_CASE("membership in I + (u) splits") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> gens{random_monomial(rng, n, 3), random_monomial(rng, n, 3)};
        const MonomialIdeal I(n, gens);
        const Monomial u = random_monomial(rng, n, 3);
        const IdealOrUnit sum = add(I, u);
        for (int k = 0; k < 20; ++k) {
            const Monomial a = random_monomial(rng, n, 5);
            CHECK(member(sum, a) == (contains(I, a) || divides(u, a)));
        }
    }
}
