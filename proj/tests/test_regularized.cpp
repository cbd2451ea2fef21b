#include "doctest.h"

#include <cmath>

#include "fpt/random_instances.hpp"
#include "fpt/regularized.hpp"

using namespace fpt;

TEST_CASE("nondecreasing growth is its own regularization") {
    const GrowthFunction f = GrowthFunction::parse("poly:1");
    const RegularizedGrowth r = regularize_default(f, 20);
    CHECK(r.all_stable());
    for (std::size_t n = 1; n <= 20; ++n)
        CHECK(r.log_value(n) == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-14));
    const auto contacts = equal_product_indices(f, 20, 20);
    CHECK(contacts.size() == 20);  // minorant touches everywhere
}

TEST_CASE("a decreasing pair averages geometrically") {
    const GrowthFunction f({4, 1});
    const RegularizedGrowth r = regularize_default(f, 2);
    CHECK(r.all_stable());
    CHECK(r.value(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.value(2) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(equal_product_indices(f, 2, 0) == std::vector<std::size_t>{2});
}

TEST_CASE("alternating growth regularizes to paired geometric means") {
    const GrowthFunction f = GrowthFunction::parse("alt:1,2");
    const RegularizedGrowth r = regularize_default(f, 9);
    CHECK(r.all_stable());
    // minorant dips under the first lonely 1, then pairs each power with
    // the 1 that follows it: f~(2k) = f~(2k+1) = 2^(k/2)
    CHECK(r.value(1) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t k = 1; k <= 4; ++k) {
        const double expect = std::pow(2.0, static_cast<double>(k) / 2.0);
        CHECK(r.value(2 * k) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(r.value(2 * k + 1) == doctest::Approx(expect).epsilon(1e-12));
    }
    // odd indices are minorant contacts: products preserved there
    CHECK(r.minorant_cumulative[7] == doctest::Approx(std::log(64.0)).epsilon(1e-12));
    CHECK(r.minorant_cumulative[9] == doctest::Approx(std::log(1024.0)).epsilon(1e-12));
}

TEST_CASE("constant tails clamp to an exact ray") {
    const GrowthFunction f({5, 1}, [] {
        GrowthTail t;
        t.kind = GrowthTail::Kind::Constant;
        t.constant_value = 3;
        return t;
    }());
    // cumulative logs: ln5, ln5, then +ln3 per step; minorant from (0,0)
    const RegularizedGrowth r = regularize_hull(f, 6, 0);
    CHECK(r.all_stable());  // ray form: final regardless of slack
    for (std::size_t n = 1; n <= 6; ++n) CHECK(r.value(n) <= 3.0 + 1e-12);
    CHECK(r.value(6) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("the two routes agree on stable indices") {
    RngStream rng(41, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> table(30);
        for (auto& v : table) v = 1 + random_index(rng, 0, 9);
        const GrowthFunction f(table);
        const RegularizedGrowth h = regularize_hull(f, 10, 10);
        const RegularizedGrowth rec = regularize_recursive(f, 10, 10);
        for (std::size_t n = 1; n <= 10; ++n) {
            if (!h.is_stable(n) || !rec.is_stable(n)) continue;
            const double scale = std::max(1.0, std::fabs(h.log_value(n)));
            CHECK(std::fabs(h.log_value(n) - rec.log_value(n)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("regularization commutes with powers of the growth function") {
    RngStream rng(42, 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> logs(25);
        for (auto& x : logs) x = std::log(1.0 + static_cast<double>(random_index(rng, 0, 8)));
        const auto base = hull_log_increments(logs);
        for (const double s : {0.5, 2.0, 3.0}) {
            std::vector<double> scaled(logs);
            for (auto& x : scaled) x *= s;
            const auto powed = hull_log_increments(scaled);
            for (std::size_t i = 0; i < base.size(); ++i)
                CHECK(powed[i] == doctest::Approx(s * base[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("windows, slack, and stability plumbing") {
    const GrowthFunction table = GrowthFunction::parse("table:2,1,2,1");
    CHECK_THROWS_AS(regularize_default(table, 10), TableHorizonError);
    CHECK_THROWS_AS(regularize_hull(table, 0, 0), ContractError);
    CHECK_THROWS_AS(regularize_hull(table, 2, 10), TableHorizonError);

    // zero slack on a live tail certifies nothing
    const RegularizedGrowth loose = regularize_hull(GrowthFunction::parse("alt:1,2"), 4, 0);
    CHECK_FALSE(loose.all_stable());
    CHECK_THROWS_AS(equal_product_indices(GrowthFunction::parse("alt:1,2"), 4, 0), ContractError);

    // exhausted table: final values, stable by construction
    const RegularizedGrowth full = regularize_hull(table, 4, 0);
    CHECK(full.all_stable());
    CHECK(full.analyzed_horizon == 4);
}
