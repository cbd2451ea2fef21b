#include "doctest.h"

#include <cmath>

#include "fpt/growth.hpp"

using namespace fpt;

TEST_CASE("mini-language parses and round-trips") {
    const char* forms[] = {"table:1,2,3", "const:4", "poly:2", "poly:1,3",
                           "exp:2",       "alt:1,2", "alt:3,1.5"};
    for (const char* f : forms) {
        const GrowthFunction g = GrowthFunction::parse(f);
        const GrowthFunction h = GrowthFunction::parse(g.describe());
        const std::uint64_t top = g.max_index() ? *g.max_index() : 6;
        for (std::uint64_t n = 1; n <= top; ++n) CHECK(g.value(n) == h.value(n));
    }
    CHECK_THROWS_AS(GrowthFunction::parse("poly:-1"), ContractError);
    CHECK_THROWS_AS(GrowthFunction::parse("table:"), ParseError);
    CHECK_THROWS_AS(GrowthFunction::parse("table:0,2"), ContractError);
    CHECK_THROWS_AS(GrowthFunction::parse("alt:1,1"), ContractError);
    CHECK_THROWS_AS(GrowthFunction::parse("nope:1"), ParseError);
}

TEST_CASE("table-only growth ends loudly") {
    const GrowthFunction g = GrowthFunction::parse("table:2,3,5");
    CHECK(g.table_only());
    CHECK(g.max_index() == 3);
    CHECK(g.value(1) == 2);
    CHECK(g.value(3) == 5);
    CHECK_THROWS_AS(g.value(4), TableHorizonError);
    CHECK_THROWS_AS(g.log_value(4), TableHorizonError);
}

TEST_CASE("polynomial tails apply the ceiling exactly") {
    const GrowthFunction lin = GrowthFunction::parse("poly:1");
    for (std::uint64_t n = 1; n <= 100; ++n) CHECK(lin.value(n) == n);

    const GrowthFunction sq = GrowthFunction::parse("poly:2");
    CHECK(sq.value(7) == 49);

    const GrowthFunction half = GrowthFunction::parse("poly:0.5");  // ceil(sqrt(n))
    CHECK(half.value(1) == 1);
    CHECK(half.value(2) == 2);
    CHECK(half.value(4) == 2);  // exact square: snap, no spurious bump
    CHECK(half.value(5) == 3);
    CHECK(half.value(9) == 3);

    const GrowthFunction scaled = GrowthFunction::parse("poly:1,3");  // ceil(3n)
    CHECK(scaled.value(4) == 12);
}

TEST_CASE("exponential tails: exact values, overflow, log route") {
    const GrowthFunction g = GrowthFunction::parse("exp:2");
    CHECK(g.value(10) == 1024);
    CHECK(g.value(62) == (1ULL << 62));
    CHECK_THROWS_AS(g.value(70), SizeError);            // > 2^64
    CHECK(g.value_int(70) == BigInt(1) << 70);          // exact big-integer route
    CHECK(g.log_value(70) == doctest::Approx(70 * std::log(2.0)).epsilon(1e-12));
    CHECK(g.log_value(10000) == doctest::Approx(10000 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("alternating tails hold the odd value and double the even one") {
    const GrowthFunction g = GrowthFunction::parse("alt:1,2");
    // odd indices 1, even index 2k carries ceil(2^k)
    CHECK(g.value(1) == 1);
    CHECK(g.value(2) == 2);
    CHECK(g.value(3) == 1);
    CHECK(g.value(4) == 4);
    CHECK(g.value(5) == 1);
    CHECK(g.value(6) == 8);
    CHECK(g.value(10) == 32);
}

TEST_CASE("prefix overrides the tail formula") {
    GrowthTail tail;
    tail.kind = GrowthTail::Kind::Polynomial;
    tail.poly_degree = 1;
    tail.poly_scale = 1;
    const GrowthFunction g({7, 7}, tail);
    CHECK(g.value(1) == 7);
    CHECK(g.value(2) == 7);
    CHECK(g.value(3) == 3);
    CHECK_FALSE(g.table_only());
    CHECK_FALSE(g.max_index().has_value());
}

TEST_CASE("constant_tail_log_slope reports exactly-constant increments") {
    const auto s = GrowthFunction::parse("const:5").constant_tail_log_slope();
    REQUIRE(s.has_value());
    CHECK(*s == doctest::Approx(std::log(5.0)));
    const auto z = GrowthFunction::parse("poly:0").constant_tail_log_slope();
    REQUIRE(z.has_value());
    CHECK(*z == doctest::Approx(0.0));
    CHECK_FALSE(GrowthFunction::parse("poly:1").constant_tail_log_slope().has_value());
    CHECK_FALSE(GrowthFunction::parse("table:1,2").constant_tail_log_slope().has_value());
    CHECK_FALSE(GrowthFunction::parse("alt:1,2").constant_tail_log_slope().has_value());
}

TEST_CASE("values stay >= 1 and zero entries are rejected") {
    CHECK_THROWS_AS(GrowthFunction({1, 0, 2}), ContractError);
    CHECK(GrowthFunction::parse("poly:0").value(50) == 1);  // degree 0: constant 1
}
