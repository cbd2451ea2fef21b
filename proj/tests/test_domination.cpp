#include "doctest.h"

#include "fpt/domination.hpp"
#include "fpt/path_prob.hpp"
#include "fpt/random_instances.hpp"

using namespace fpt;

TEST_CASE("spherical domination is the cumulative product comparison") {
    const GrowthFunction f = GrowthFunction::parse("table:3,2");
    const GrowthFunction g = GrowthFunction::parse("table:2,3");
    // products 3,6 vs 2,6: f dominates g, g does not dominate f
    CHECK(dominates_spherical(f, g, 2).dominates);
    const auto r = dominates_spherical(g, f, 2);
    CHECK_FALSE(r.dominates);
    CHECK(r.first_failing_level == 1);

    // equal products dominate both ways
    CHECK(dominates_spherical(f, f, 2).dominates);

    // late failure: products 2,4,8 vs 1,4,12
    const auto late = dominates_spherical(GrowthFunction::parse("table:2,2,2"),
                                          GrowthFunction::parse("table:1,4,3"), 3);
    CHECK_FALSE(late.dominates);
    CHECK(late.first_failing_level == 3);
}

TEST_CASE("spherical domination respects horizons and table ends") {
    const GrowthFunction f = GrowthFunction::parse("table:2");
    CHECK_THROWS_AS(dominates_spherical(f, f, 5), TableHorizonError);
    CHECK_THROWS_AS(dominates_spherical(f, f, 0), ContractError);
    // tails extend beyond any finite table
    CHECK_NOTHROW(dominates_spherical(GrowthFunction::parse("poly:1"),
                                      GrowthFunction::parse("const:2"), 1000));
}

TEST_CASE("height-2 domination is the tail-sum comparison") {
    CHECK(dominates_height2({2, 2}, {3, 1}).dominates);
    CHECK(dominates_height2({3, 1}, {3, 1}).dominates);

    const auto r = dominates_height2({3, 1}, {2, 2});
    CHECK_FALSE(r.dominates);
    CHECK(r.violated_tail_index == 1);
    CHECK(r.witness_exponent == 2);  // the tail entry of q that wins

    const auto zero_case = dominates_height2({1}, {2});
    CHECK_FALSE(zero_case.dominates);
    CHECK(zero_case.violated_tail_index == 0);
    CHECK(zero_case.witness_exponent == 2);

    // zeros pad shorter partitions
    CHECK(dominates_height2({2, 1, 0}, {2, 1}).dominates);
    CHECK_THROWS_AS(dominates_height2({1, 2}, {1}), ContractError);
}

TEST_CASE("failed height-2 domination reverses on its witness set") {
    const std::vector<std::uint64_t> p{3, 1}, q{2, 2};
    const auto r = dominates_height2(p, q);
    REQUIRE_FALSE(r.dominates);
    const RootedTree tp = build_height2_tree(p), tq = build_height2_tree(q);
    bool reversed = false;
    for (int k = 1; k <= 10 && !reversed; ++k) {
        const BoxUnion d = height2_witness_set(*r.witness_exponent, Rational(1, 1 << k));
        reversed = tree_all_paths_prob(tp, d).value() > tree_all_paths_prob(tq, d).value();
    }
    CHECK(reversed);
}

TEST_CASE("count bound: equality exactly at root-only branching") {
    Box b{{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}};
    const BoxUnion B(2, {b});

    // three disjoint paths: independent, bound tight
    const auto tight = check_count_bound(GradedGraph::from_tree(build_paths_tree(2, 3)), B);
    CHECK(tight.holds);
    CHECK(tight.full_paths == 3);
    CHECK(tight.lhs == tight.rhs);

    // shared level-1 vertex: dependence, strict slack
    const auto loose =
        check_count_bound(GradedGraph::from_tree(build_spherical(GrowthFunction({1, 2}), 2)), B);
    CHECK(loose.holds);
    CHECK(loose.full_paths == 2);
    CHECK(loose.lhs == Rational(5, 8));
    CHECK(loose.rhs == Rational(9, 16));
}

TEST_CASE("count bound holds on random graded graphs") {
    RngStream rng(31, 0);
    int checked = 0;
    while (checked < 30) {
        const GradedGraph g = random_graded_graph(rng, 3, 8);
        const BoxUnion B = random_box_union(rng, g.num_levels(), 1, 2, 5);
        const auto c = check_count_bound(g, B);
        CHECK(c.holds);
        ++checked;
    }
}
