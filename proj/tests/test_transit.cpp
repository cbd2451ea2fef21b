#include "doctest.h"

#include <chrono>
#include <cmath>

#include "fpt/transit.hpp"
#include "oracles.hpp"

using namespace fpt;

TEST_CASE("inverse cdfs in plain and log arguments") {
    const TransitDist e = TransitDist::exponential();
    CHECK(e.inverse_cdf(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(e.inverse_cdf(0.0) == 0.0);
    CHECK_THROWS_AS(e.inverse_cdf(1.5), ContractError);

    const TransitDist p = TransitDist::power_law(2.0, 3.0);
    CHECK(p.alpha() == 2.0);
    CHECK(p.inverse_cdf(0.75) == doctest::Approx(0.5).epsilon(1e-15));

    // log route stays accurate where the plain argument would round to 0
    CHECK(e.inverse_cdf_log(-700.0) == doctest::Approx(std::exp(-700.0)).epsilon(1e-12));
    CHECK(e.inverse_cdf_log(-700.0) > 0.0);
    const TransitDist p1 = TransitDist::power_law(2.0, 1.0);
    CHECK(std::log(p1.inverse_cdf_log(-1000.0)) == doctest::Approx(-500.0).epsilon(1e-12));

    CHECK_THROWS_AS(TransitDist::power_law(-1.0, 1.0), ContractError);
}

TEST_CASE("child counts switch to logs past 64 bits") {
    const GrowthFunction g = GrowthFunction::parse("exp:2");
    const ChildCount small = child_count(g, 10);
    CHECK(small.exact);
    CHECK(small.count == 1024);
    const ChildCount huge = child_count(g, 200);
    CHECK_FALSE(huge.exact);
    CHECK(huge.log_count == doctest::Approx(200 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(ChildCount::of(0), ContractError);
}

TEST_CASE("minimum of m transits has mean 1/m for exponentials") {
    RngStream rng(51, 0);
    const ChildCount m = ChildCount::of(100);
    const TransitDist e = TransitDist::exponential();
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += sample_min_transit(m, e, rng);
    // mean 1/100, sd of the mean (1/100)/sqrt(n); allow 5 sigma
    CHECK(sum / n == doctest::Approx(0.01).epsilon(5.0 / std::sqrt(static_cast<double>(n))));
}

TEST_CASE("order statistics match brute force in distribution") {
    const unsigned k = 3;
    const std::uint64_t m = 50;
    const int reps = 4000;
    for (const TransitDist& dist :
         {TransitDist::exponential(), TransitDist::power_law(2.0, 1.0)}) {
        RngStream fast_rng(52, 1), naive_rng(52, 2);
        std::vector<std::vector<double>> fast(k), naive(k);
        for (int r = 0; r < reps; ++r) {
            const auto f = sample_k_order_stats(ChildCount::of(m), k, dist, fast_rng);
            const auto n = oracle::naive_k_smallest(m, k, dist, naive_rng);
            REQUIRE(f.size() == k);
            REQUIRE(std::is_sorted(f.begin(), f.end()));
            for (unsigned j = 0; j < k; ++j) {
                fast[j].push_back(f[j]);
                naive[j].push_back(n[j]);
            }
        }
        for (unsigned j = 0; j < k; ++j) {
            const double d = oracle::ks_statistic(fast[j], naive[j]);
            CHECK(d < oracle::ks_critical_1pct(reps, reps));
        }
    }
}

TEST_CASE("order statistics stay O(k) as m grows") {
    const TransitDist p = TransitDist::power_law(2.0, 1.0);
    auto time_for = [&](std::uint64_t m) {
        RngStream rng(53, m);
        const ChildCount c = ChildCount::of(m);
        volatile double sink = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < 20000; ++i) sink = sink + sample_k_order_stats(c, 5, p, rng).back();
        const auto t1 = std::chrono::steady_clock::now();
        (void)sink;
        return std::chrono::duration<double>(t1 - t0).count();
    };
    const double small = time_for(100);
    const double large = time_for(1000000);
    CHECK(large < 5.0 * small + 1e-3);
}

TEST_CASE("order statistics on log-only counts are tiny and ordered") {
    const ChildCount m = ChildCount::from_log(200 * std::log(2.0));
    RngStream rng(54, 0);
    const auto xs = sample_k_order_stats(m, 4, TransitDist::exponential(), rng);
    REQUIRE(xs.size() == 4);
    CHECK(std::is_sorted(xs.begin(), xs.end()));
    CHECK(xs[0] > 0.0);
    CHECK(xs.back() < 1e-30);
}

TEST_CASE("k beyond the population is rejected") {
    RngStream rng(55, 0);
    CHECK_THROWS_AS(sample_k_order_stats(ChildCount::of(3), 4, TransitDist::exponential(), rng),
                    ContractError);
    const auto all = sample_k_order_stats(ChildCount::of(3), 3, TransitDist::exponential(), rng);
    CHECK(all.size() == 3);
}
