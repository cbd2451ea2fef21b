#include "doctest.h"

#include <cmath>

#include "fpt/classify.hpp"
#include "fpt/transit.hpp"

using namespace fpt;

TEST_CASE("analytic tail verdicts") {
    const auto lin = classify_growth(GrowthFunction::parse("poly:1"), 1.0, 200);
    CHECK(lin.analytic);
    CHECK_FALSE(lin.explosive);

    const auto sq = classify_growth(GrowthFunction::parse("poly:2"), 1.0, 200);
    CHECK(sq.analytic);
    CHECK(sq.explosive);

    // degree/alpha exactly 1 sits on the divergent side
    const auto crit = classify_growth(GrowthFunction::parse("poly:2"), 2.0, 200);
    CHECK(crit.analytic);
    CHECK_FALSE(crit.explosive);

    const auto expg = classify_growth(GrowthFunction::parse("exp:2"), 1.0, 100);
    CHECK(expg.analytic);
    CHECK(expg.explosive);

    const auto flat = classify_growth(GrowthFunction::parse("const:9"), 1.0, 100);
    CHECK(flat.analytic);
    CHECK_FALSE(flat.explosive);

    const auto shrink = classify_growth(GrowthFunction::parse("exp:0.9"), 1.0, 100);
    CHECK(shrink.analytic);
    CHECK_FALSE(shrink.explosive);

    const auto alt = classify_growth(GrowthFunction::parse("alt:1,2"), 1.0, 200);
    CHECK(alt.analytic);
    CHECK(alt.explosive);
}

TEST_CASE("alpha tilts the same growth across the boundary") {
    // f(n) = n^2: explosive for alpha 1, divergent for alpha >= 2
    CHECK(classify_growth(GrowthFunction::parse("poly:2"), 1.0, 100).explosive);
    CHECK(classify_growth(GrowthFunction::parse("poly:2"), 1.5, 100).explosive);
    CHECK_FALSE(classify_growth(GrowthFunction::parse("poly:2"), 3.0, 100).explosive);
}

TEST_CASE("table-only growth yields window evidence, not certificates") {
    std::vector<std::uint64_t> doubling;
    for (int n = 1; n <= 40; ++n) doubling.push_back(1ULL << n);
    const auto fast = classify_growth(GrowthFunction(doubling), 1.0, 20);
    CHECK_FALSE(fast.analytic);
    CHECK(fast.explosive);  // second-half movement below 1e-3

    std::vector<std::uint64_t> ones(40, 1);
    const auto slow = classify_growth(GrowthFunction(ones), 1.0, 20);
    CHECK_FALSE(slow.analytic);
    CHECK_FALSE(slow.explosive);
}

TEST_CASE("partial sums hit decade checkpoints and exact values") {
    const auto v = classify_growth(GrowthFunction::parse("poly:1"), 1.0, 1000);
    REQUIRE(v.partial_sums.size() == 4);  // 1, 10, 100, 1000
    CHECK(v.partial_sums[0].first == 1);
    CHECK(v.partial_sums[1].first == 10);
    CHECK(v.partial_sums[2].first == 100);
    CHECK(v.partial_sums[3].first == 1000);
    // f~ = f = n here, so the sums are harmonic numbers
    double h = 0;
    for (int n = 1; n <= 1000; ++n) h += 1.0 / n;
    CHECK(v.partial_sums[3].second == doctest::Approx(h).epsilon(1e-9));
}

TEST_CASE("limit constants") {
    CHECK(power_law_limit_constant(1.0, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    // alpha 2, c 1: 2/e * Gamma(3)^(-1/2) = sqrt(2)/e
    CHECK(power_law_limit_constant(2.0, 1.0) ==
          doctest::Approx(std::sqrt(2.0) / std::exp(1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(power_law_limit_constant(0.0, 1.0), ContractError);
    CHECK_THROWS_AS(power_law_limit_constant(1.0, -2.0), ContractError);
}

TEST_CASE("general distributions reuse the criterion through the inverse cdf") {
    const TransitDist exp_dist = TransitDist::exponential();
    const auto sums = general_criterion_partial_sums(
        GrowthFunction::parse("const:2"), [&](double u) { return exp_dist.inverse_cdf(u); }, 100);
    // every term is -ln(1/2); the sum is n ln 2
    CHECK(sums.back().first == 100);
    CHECK(sums.back().second == doctest::Approx(100 * std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(general_criterion_partial_sums(
                        GrowthFunction::parse("table:3,2,2"),
                        [&](double u) { return exp_dist.inverse_cdf(u); }, 3),
                    ContractError);
}

TEST_CASE("classification guards its inputs") {
    CHECK_THROWS_AS(classify_growth(GrowthFunction::parse("poly:1"), 0.0, 10), ContractError);
    CHECK_THROWS_AS(classify_growth(GrowthFunction::parse("poly:1"), 1.0, 0), ContractError);
    CHECK_THROWS_AS(classify_growth(GrowthFunction::parse("table:1,2"), 1.0, 10),
                    TableHorizonError);
}
