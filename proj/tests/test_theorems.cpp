#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sdepth/betti.hpp"
#include "sdepth/theorems.hpp"

using namespace sdepth;
using sdepth::testing::ideal;
using sdepth::testing::mono;

namespace {

const MonomialIdeal& worked_ideal() {
    static const MonomialIdeal I = ideal(4, {{2, 0, 0, 0}, {1, 2, 0, 0}, {1, 1, 2, 0}});
    return I;
}

AdmissibleOrder worked_order() { return *find_admissible_order(worked_ideal()); }

} // namespace

TEST_CASE("principal collapse witnesses") {
    const auto two_vars = find_admissible_order(ideal(2, {{1, 0}, {0, 1}}));
    const auto w1 = find_principal_collapse(*two_vars);
    REQUIRE(w1.has_value());
    CHECK(w1->tau == std::vector<int>{0});
    CHECK(w1->u == mono({0, 1}));
    CHECK(check_collapse_witness(two_vars->ideal, *w1));

    const auto w2 = find_principal_collapse(worked_order());
    REQUIRE(w2.has_value());
    CHECK(w2->tau == std::vector<int>{1, 2});
    CHECK(w2->u == mono({2, 0, 0, 0}));
    CHECK(check_collapse_witness(worked_ideal(), *w2));

    const auto principal = find_admissible_order(ideal(3, {{1, 1, 0}}));
    const auto w3 = find_principal_collapse(*principal);
    REQUIRE(w3.has_value());
    CHECK(w3->tau.empty());
    CHECK(w3->u == mono({1, 1, 0}));
    CHECK(check_collapse_witness(principal->ideal, *w3));
}

TEST_CASE("sdepth equals depth at depth n-2") {
    const DepthCodim2Verdict two_vars = verify_depth_nminus2(ideal(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(two_vars.depth == 1);
    CHECK(two_vars.sdepth == 1);
    CHECK(two_vars.holds());

    const DepthCodim2Verdict worked = verify_depth_nminus2(ideal(3, {{2, 0, 0}, {1, 2, 0}}));
    CHECK(worked.depth == 1);
    CHECK(worked.holds());

    CHECK_THROWS_AS(verify_depth_nminus2(ideal(3, {{1, 1, 0}})), std::invalid_argument);
}

TEST_CASE("pipeline reproduces the worked trace") {
    const PipelineResult trace = run_iterative_pipeline(worked_order());
    REQUIRE(trace.completed());
    REQUIRE(trace.steps.size() == 3);

    const auto& d1 = trace.steps[0];
    CHECK(d1.prefix_ideal == ideal(4, {{2, 0, 0, 0}}));
    CHECK(d1.decomposition.pieces ==
          std::vector<StanleyPiece>{StanleyPiece{Monomial::unit(4), {1, 2, 3}},
                                    StanleyPiece{mono({1, 0, 0, 0}), {1, 2, 3}}});
    CHECK(d1.sdepth == 3);
    CHECK(d1.depth == 3);

    const auto& d2 = trace.steps[1];
    CHECK(d2.slot == 1);
    CHECK(d2.decomposition.pieces ==
          std::vector<StanleyPiece>{StanleyPiece{Monomial::unit(4), {1, 2, 3}},
                                    StanleyPiece{mono({1, 0, 0, 0}), {2, 3}},
                                    StanleyPiece{mono({1, 1, 0, 0}), {2, 3}}});
    CHECK(d2.sdepth == 2);
    CHECK(d2.depth == 2);

    const auto& final_step = trace.steps[2];
    CHECK(final_step.slot == 2);
    CHECK(final_step.decomposition.pieces ==
          std::vector<StanleyPiece>{StanleyPiece{Monomial::unit(4), {1, 2, 3}},
                                    StanleyPiece{mono({1, 0, 0, 0}), {2, 3}},
                                    StanleyPiece{mono({1, 1, 0, 0}), {3}},
                                    StanleyPiece{mono({1, 1, 1, 0}), {3}}});
    CHECK(final_step.sdepth == 1);
    CHECK(final_step.depth == 1);
    CHECK(verify_decomposition(final_step.decomposition));
    CHECK(final_step.sdepth >= depth_oracle(worked_ideal()));
}

TEST_CASE("pipeline on a principal ideal is trivial") {
    const PipelineResult trace = run_iterative_pipeline(*find_admissible_order(ideal(3, {{1, 2, 0}})));
    REQUIRE(trace.completed());
    CHECK(trace.steps.size() == 1);
    CHECK(trace.steps[0].sdepth == 2);
    CHECK(verify_decomposition(trace.steps[0].decomposition));
}

TEST_CASE("pipeline reports the step with no slot") {
    // reversed order of the worked example's first two generators: the first
    // staircase leaves no piece with Z = {x2,x3,x4} containing x1^2
    std::vector<Monomial> order{mono({1, 2, 0, 0}), mono({2, 0, 0, 0}), mono({1, 1, 2, 0})};
    const AdmissibleOrder reversed{worked_ideal(), order, {{}, {0}, {0, 1}}};
    REQUIRE(check_admissible_order(reversed));
    const PipelineResult trace = run_iterative_pipeline(reversed);
    CHECK_FALSE(trace.completed());
    CHECK(trace.failed_step == 1);
    CHECK(trace.steps.size() == 1);
}

TEST_CASE("weak conjecture witnesses") {
    // adding x1 collapses the worked ideal to (x1), whose depth 3 >= 1
    CHECK(conjecture_witness(worked_ideal()) == 0);
    CHECK(conjecture_witness(ideal(2, {{1, 0}})) == 0);  // x1 is a generator
    CHECK(conjecture_witness(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 0);
}

TEST_CASE("strong conjecture witnesses") {
    // x1 and x2 fail the sdepth condition (3 > 1 and 2 > 1); x3 gives 1 <= 1
    CHECK(strong_conjecture_witness(worked_ideal()) == 2);
    CHECK(strong_conjecture_witness(ideal(3, {{1, 0, 0}, {0, 1, 1}})) == 0);  // generator variable
    CHECK(strong_conjecture_witness(ideal(2, {{1, 1}})) == 0);
}

TEST_CASE("conjecture scan records per-variable values") {
    const ConjectureReport report = conjecture_scan(worked_ideal(), true);
    CHECK(report.base_depth == 1);
    CHECK(report.base_sdepth == 1);
    REQUIRE(report.per_variable.size() == 4);
    CHECK(report.per_variable[0].depth_added == 3);   // (I, x1) = (x1)
    CHECK(report.per_variable[0].sdepth_added == 3);
    CHECK_FALSE(report.per_variable[0].qualifies);
    CHECK(report.per_variable[1].depth_added == 2);   // (I, x2) = (x1^2, x2)
    CHECK(report.per_variable[1].sdepth_added == 2);
    CHECK_FALSE(report.per_variable[1].qualifies);
    CHECK(report.per_variable[2].depth_added == 1);
    CHECK(report.per_variable[2].sdepth_added == 1);
    CHECK(report.per_variable[2].qualifies);
    CHECK(report.per_variable[3].depth_added == 0);   // x4 cuts depth to 0
    CHECK_FALSE(report.per_variable[3].qualifies);
    CHECK(report.witness == 2);
}

TEST_CASE("combinatorial witnesses") {
    CHECK(combinatorial_witness(worked_order()) == 0);  // x1 divides every generator

    // principal case: the minimal-|Z| step is the first one, so the witness
    // must divide the generator
    CHECK(combinatorial_witness(*find_admissible_order(ideal(2, {{0, 1}}))) == 1);

    const auto maximal = find_admissible_order(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(combinatorial_witness(*maximal) == 0);
}

TEST_CASE("combinatorial witness implies depth witness") {
    std::mt19937_64 seeds(61);
    for (int round = 0; round < 40; ++round) {
        RandomIdealParams params;
        params.n = 2 + round % 4;
        params.m = 1 + round % 5;
        const auto [I, order] = random_linear_quotient_ideal(params, seeds());
        const auto witness = combinatorial_witness(order);
        if (!witness) continue;
        const int n = I.vars();
        const int base = depth_oracle(I);
        const Monomial xi = Monomial::variable(n, *witness);
        const int added = contains(I, xi) ? base : depth_oracle(add(I, xi).ideal());
        CHECK(added >= base);
    }
}

TEST_CASE("conditional chain certification") {
    const ChainVerdict worked = conditional_chain_verify(worked_ideal());
    CHECK(worked.certified);
    CHECK_FALSE(worked.stuck_n.has_value());
    REQUIRE_FALSE(worked.levels.empty());
    CHECK(worked.levels.front().sdepth_full >= worked.levels.front().depth_full);
    CHECK(worked.levels.back().ideal.is_principal());

    const ChainVerdict principal = conditional_chain_verify(ideal(3, {{1, 1, 0}}));
    CHECK(principal.certified);
    CHECK(principal.levels.size() == 1);
    CHECK(principal.levels[0].sdepth_full == 2);

    const ChainVerdict maximal =
        conditional_chain_verify(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(maximal.certified);
    CHECK(maximal.levels.size() == 3);
    CHECK(maximal.levels[0].depth_full == 0);
    CHECK(maximal.levels[0].sdepth_full == 0);
}

TEST_CASE("exact sequence inequalities") {
    const ExactSequenceReport worked = exact_sequence_checks(worked_ideal(), 1);
    CHECK(worked.all_hold());

    const ExactSequenceReport principal = exact_sequence_checks(ideal(2, {{2, 0}}), 0);
    CHECK(principal.all_hold());

    // the colon loses linear quotients here; the checks only need the oracles
    const MonomialIdeal chain = ideal(5, {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}});
    const ExactSequenceReport no_lq = exact_sequence_checks(chain, 4);
    CHECK(no_lq.all_hold());

    // unit colon: x1 is a generator, S/(I:x1) is the zero module
    const ExactSequenceReport unit_colon = exact_sequence_checks(ideal(2, {{1, 0}, {0, 2}}), 0);
    CHECK_FALSE(unit_colon.depth_colon.has_value());
    CHECK(unit_colon.all_hold());
}

TEST_CASE("random generator is deterministic and admissible") {
    RandomIdealParams params;
    params.n = 4;
    params.m = 3;
    params.max_degree = 3;
    const auto [i1, o1] = random_linear_quotient_ideal(params, 99);
    const auto [i2, o2] = random_linear_quotient_ideal(params, 99);
    CHECK(i1 == i2);
    CHECK(o1.order == o2.order);

    std::mt19937_64 seeds(62);
    for (int round = 0; round < 50; ++round) {
        RandomIdealParams p;
        p.n = 2 + round % 5;
        p.m = 1 + round % 6;
        const auto [I, order] = random_linear_quotient_ideal(p, seeds());
        CHECK(check_admissible_order(order));
        CHECK(find_admissible_order(I).has_value());
        CHECK(order.size() >= 1);
        CHECK(order.size() <= p.m);
    }

    RandomIdealParams principal;
    principal.m = 1;
    const auto [ip, op] = random_linear_quotient_ideal(principal, 5);
    CHECK(ip.is_principal());
}
