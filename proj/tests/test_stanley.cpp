#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sdepth/stanley.hpp"
#include "sdepth/sweep.hpp"
#include "sdepth/theorems.hpp"

using namespace sdepth;
using sdepth::testing::ideal;
using sdepth::testing::mono;

namespace {

const MonomialIdeal& worked_ideal() {
    static const MonomialIdeal I = ideal(4, {{2, 0, 0, 0}, {1, 2, 0, 0}, {1, 1, 2, 0}});
    return I;
}

} // namespace

TEST_CASE("verify_decomposition basics") {
    // S/(x1) in one variable is just K
    const StanleyDecomposition k_only{TargetKind::Quotient, ideal(1, {{1}}),
                                      {StanleyPiece{Monomial::unit(1), {}}}};
    CHECK(verify_decomposition(k_only));

    // 1*K[x1,x2] covers monomials of I too, so it is not a decomposition of S/I
    const StanleyDecomposition cover_all{TargetKind::Quotient, ideal(2, {{1, 1}}),
                                         {StanleyPiece{Monomial::unit(2), {0, 1}}}};
    CHECK_FALSE(verify_decomposition(cover_all));
}

TEST_CASE("sdepth of a decomposition") {
    const StanleyDecomposition final_d{
        TargetKind::Quotient, worked_ideal(),
        {StanleyPiece{Monomial::unit(4), {1, 2, 3}}, StanleyPiece{mono({1, 0, 0, 0}), {2, 3}},
         StanleyPiece{mono({1, 1, 0, 0}), {3}}, StanleyPiece{mono({1, 1, 1, 0}), {3}}}};
    CHECK(verify_decomposition(final_d));
    CHECK(sdepth_of_decomposition(final_d) == 1);

    const StanleyDecomposition d1{
        TargetKind::Quotient, ideal(4, {{2, 0, 0, 0}}),
        {StanleyPiece{Monomial::unit(4), {1, 2, 3}}, StanleyPiece{mono({1, 0, 0, 0}), {1, 2, 3}}}};
    CHECK(verify_decomposition(d1));
    CHECK(sdepth_of_decomposition(d1) == 3);

    CHECK_THROWS_AS(
        sdepth_of_decomposition(StanleyDecomposition{TargetKind::Quotient, worked_ideal(), {}}),
        std::invalid_argument);
}

TEST_CASE("characteristic poset") {
    const CharacteristicPoset two_vars =
        characteristic_poset(ideal(2, {{1, 0}, {0, 1}}), TargetKind::Quotient);
    CHECK(two_vars.cap == Exponents{1, 1});
    CHECK(two_vars.points == std::vector<Exponents>{{0, 0}});

    const CharacteristicPoset square = characteristic_poset(ideal(1, {{2}}), TargetKind::Quotient);
    CHECK(square.cap == Exponents{2});
    CHECK(square.points == std::vector<Exponents>{{0}, {1}});

    const CharacteristicPoset edge = characteristic_poset(ideal(2, {{1, 1}}), TargetKind::Ideal);
    CHECK(edge.points == std::vector<Exponents>{{1, 1}});
}

TEST_CASE("exact Stanley depth") {
    CHECK(sdepth_exact(worked_ideal(), TargetKind::Quotient) == 1);
    CHECK(sdepth_exact(ideal(4, {{2, 0, 0, 0}}), TargetKind::Quotient) == 3);
    CHECK(sdepth_exact(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), TargetKind::Quotient) == 0);
}

TEST_CASE("partition to decomposition") {
    const CharacteristicPoset corner =
        characteristic_poset(ideal(2, {{1, 0}, {0, 1}}), TargetKind::Quotient);
    const IntervalPartition single{corner, {Interval{{0, 0}, {0, 0}}}};
    REQUIRE(valid_partition(single));
    const StanleyDecomposition ds = partition_to_decomposition(single);
    REQUIRE(ds.pieces.size() == 1);
    CHECK(ds.pieces[0] == StanleyPiece{Monomial::unit(2), {}});
    CHECK(verify_decomposition(ds));

    // two singleton intervals and one merged interval encode the same pieces
    const CharacteristicPoset square = characteristic_poset(ideal(1, {{2}}), TargetKind::Quotient);
    const IntervalPartition singletons{square, {Interval{{0}, {0}}, Interval{{1}, {1}}}};
    const IntervalPartition merged{square, {Interval{{0}, {1}}}};
    const std::vector<StanleyPiece> expected{StanleyPiece{Monomial::unit(1), {}},
                                             StanleyPiece{mono({1}), {}}};
    CHECK(partition_to_decomposition(singletons).pieces == expected);
    CHECK(partition_to_decomposition(merged).pieces == expected);

    const IntervalPartition overlapping{square, {Interval{{0}, {1}}, Interval{{1}, {1}}}};
    CHECK_FALSE(valid_partition(overlapping));
    CHECK_THROWS_AS(partition_to_decomposition(overlapping), std::invalid_argument);
}

TEST_CASE("staircase pieces") {
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(staircase_quotient_pieces(Monomial::unit(4), all, Monomial::unit(4)).empty());

    const auto d1 = staircase_quotient_pieces(Monomial::unit(4), all, mono({2, 0, 0, 0}));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == StanleyPiece{Monomial::unit(4), {1, 2, 3}});
    CHECK(d1[1] == StanleyPiece{mono({1, 0, 0, 0}), {1, 2, 3}});

    // w0 = x2*x3^2 on Z = {x2,x3,x4}: three pieces, each freeing all but one
    const std::vector<int> z{1, 2, 3};
    const auto st = staircase_quotient_pieces(mono({1, 0, 0, 0}), z, mono({0, 1, 2, 0}));
    REQUIRE(st.size() == 3);
    CHECK(st[0] == StanleyPiece{mono({1, 0, 0, 0}), {2, 3}});
    CHECK(st[1] == StanleyPiece{mono({1, 1, 0, 0}), {1, 3}});
    CHECK(st[2] == StanleyPiece{mono({1, 1, 1, 0}), {1, 3}});
}

TEST_CASE("transform slot selection") {
    const StanleyDecomposition d1{
        TargetKind::Quotient, ideal(4, {{2, 0, 0, 0}}),
        {StanleyPiece{Monomial::unit(4), {1, 2, 3}}, StanleyPiece{mono({1, 0, 0, 0}), {1, 2, 3}}}};
    const std::vector<int> colon_u2{0};
    // the unit piece has the right Z and divides u_2, but x1*x2^2 is not
    // inside 1*K[x2,x3,x4]; the x1 piece is the usable slot
    CHECK(find_transform_slot(d1, mono({1, 2, 0, 0}), colon_u2) == 1);

    const StanleyDecomposition d2{
        TargetKind::Quotient, ideal(4, {{2, 0, 0, 0}, {1, 2, 0, 0}}),
        {StanleyPiece{Monomial::unit(4), {1, 2, 3}}, StanleyPiece{mono({1, 0, 0, 0}), {2, 3}},
         StanleyPiece{mono({1, 1, 0, 0}), {2, 3}}}};
    const std::vector<int> colon_u3{0, 1};
    CHECK(find_transform_slot(d2, mono({1, 1, 2, 0}), colon_u3) == 2);

    CHECK_FALSE(find_transform_slot(d1, mono({1, 1, 2, 0}), colon_u3).has_value());
}

TEST_CASE("quotient transform reproduces the worked decompositions") {
    const StanleyDecomposition d1{
        TargetKind::Quotient, ideal(4, {{2, 0, 0, 0}}),
        {StanleyPiece{Monomial::unit(4), {1, 2, 3}}, StanleyPiece{mono({1, 0, 0, 0}), {1, 2, 3}}}};

    const auto d2 = apply_quotient_transform(d1, mono({1, 2, 0, 0}), std::vector<int>{0});
    REQUIRE(d2.has_value());
    CHECK(d2->ideal == ideal(4, {{2, 0, 0, 0}, {1, 2, 0, 0}}));
    REQUIRE(d2->pieces.size() == 3);
    CHECK(d2->pieces[0] == StanleyPiece{Monomial::unit(4), {1, 2, 3}});
    CHECK(d2->pieces[1] == StanleyPiece{mono({1, 0, 0, 0}), {2, 3}});
    CHECK(d2->pieces[2] == StanleyPiece{mono({1, 1, 0, 0}), {2, 3}});
    CHECK(verify_decomposition(*d2));

    const auto final_d = apply_quotient_transform(*d2, mono({1, 1, 2, 0}), std::vector<int>{0, 1});
    REQUIRE(final_d.has_value());
    CHECK(final_d->ideal == worked_ideal());
    REQUIRE(final_d->pieces.size() == 4);
    CHECK(final_d->pieces[0] == StanleyPiece{Monomial::unit(4), {1, 2, 3}});
    CHECK(final_d->pieces[1] == StanleyPiece{mono({1, 0, 0, 0}), {2, 3}});
    CHECK(final_d->pieces[2] == StanleyPiece{mono({1, 1, 0, 0}), {3}});
    CHECK(final_d->pieces[3] == StanleyPiece{mono({1, 1, 1, 0}), {3}});
    CHECK(verify_decomposition(*final_d));
    CHECK(sdepth_of_decomposition(*final_d) == 1);
}

TEST_CASE("transform deletes the slot when u equals its coefficient") {
    const StanleyDecomposition d{
        TargetKind::Quotient, ideal(2, {{2, 0}}),
        {StanleyPiece{Monomial::unit(2), {1}}, StanleyPiece{mono({1, 0}), {1}}}};
    const auto next = apply_quotient_transform(d, mono({1, 0}), std::vector<int>{0});
    REQUIRE(next.has_value());
    CHECK(next->pieces == std::vector<StanleyPiece>{StanleyPiece{Monomial::unit(2), {1}}});
    CHECK(verify_decomposition(*next));
}

TEST_CASE("partition search is monotone in t and matches the conversion") {
    std::mt19937_64 seeds(606);
    for (int round = 0; round < 30; ++round) {
        RandomIdealParams params;
        params.n = 2 + round % 3;
        params.m = 1 + round % 4;
        const auto [I, order] = random_linear_quotient_ideal(params, seeds());
        const TargetKind kind = (round % 2) ? TargetKind::Ideal : TargetKind::Quotient;
        const CharacteristicPoset poset = characteristic_poset(I, kind);
        const int best = sdepth_exact(I, kind);

        for (int t = 0; t <= best; ++t) {
            const auto partition = find_interval_partition(poset, t);
            REQUIRE(partition.has_value());
            REQUIRE(valid_partition(*partition));
            const StanleyDecomposition d = partition_to_decomposition(*partition);
            CHECK(verify_decomposition(d));
            int min_capped = I.vars();
            for (const Interval& iv : partition->intervals) {
                int capped = 0;
                for (size_t j = 0; j < iv.hi.size(); ++j)
                    if (iv.hi[j] == poset.cap[j]) ++capped;
                min_capped = std::min(min_capped, capped);
            }
            CHECK(sdepth_of_decomposition(d) == min_capped);
            CHECK(min_capped >= t);
        }
        CHECK_FALSE(find_interval_partition(poset, best + 1).has_value());
    }
}

TEST_CASE("box reduction matches enlarged boxes") {
    CHECK(box_soundness_mismatches(60, 707) == 0);
}
