#include "doctest.h"

#include "fpt/box_union.hpp"
#include "fpt/random_instances.hpp"
#include "oracles.hpp"

using namespace fpt;

TEST_CASE("box validation bounds corners to the unit cube") {
    Box ok{{Rational(0), Rational(1, 3)}, {Rational(1, 2), Rational(1)}};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.measure() == Rational(1, 3));

    Box inverted{{Rational(1, 2)}, {Rational(1, 3)}};
    CHECK_THROWS_AS(inverted.validate(), ContractError);
    Box outside{{Rational(-1, 10)}, {Rational(1, 2)}};
    CHECK_THROWS_AS(outside.validate(), ContractError);
    Box mismatched{{Rational(0), Rational(0)}, {Rational(1)}};
    CHECK_THROWS_AS(mismatched.validate(), ContractError);
}

TEST_CASE("pinned measures: counterexample set and witness sets") {
    CHECK(gluing_counterexample_set().measure() == Rational(7, 12));

    // ([0,eps^r] x [0,1]) u ([0,1] x [0,eps]): measure eps^r + eps - eps^(r+1)
    const Rational eps(1, 4);
    const BoxUnion w = height2_witness_set(3, eps);
    const Rational e3 = rational_pow(eps, 3);
    CHECK(w.measure() == e3 + eps - e3 * eps);
}

TEST_CASE("overlap never double-counts") {
    Box a{{Rational(0)}, {Rational(2, 3)}};
    Box b{{Rational(1, 3)}, {Rational(1)}};
    const BoxUnion u(1, {a, b});
    CHECK(u.measure() == Rational(1));
    const BoxUnion twice(1, {a, a});
    CHECK(twice.measure() == Rational(2, 3));
}

TEST_CASE("degenerate boxes are legal and measure zero") {
    Box flat{{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1)}};
    const BoxUnion u(2, {flat});
    CHECK(u.measure() == Rational(0));
    CHECK(u.contains({Rational(1, 2), Rational(1, 3)}));
    CHECK_FALSE(u.contains({Rational(1, 3), Rational(1, 3)}));
}

TEST_CASE("measures agree with the naive cell oracle on random unions") {
    RngStream rng(11, 0);
    for (int i = 0; i < 60; ++i) {
        const std::size_t dim = 1 + random_index(rng, 0, 2);
        const BoxUnion u = random_box_union(rng, dim, 1, 3, 6);
        CHECK(u.measure() == oracle::measure(u));
    }
}

TEST_CASE("complement partitions the cube exactly") {
    RngStream rng(12, 0);
    for (int i = 0; i < 40; ++i) {
        const std::size_t dim = 1 + random_index(rng, 0, 1);
        const BoxUnion u = random_box_union(rng, dim, 1, 3, 5);
        const BoxUnion c = u.complement();
        CHECK(u.measure() + c.measure() == Rational(1));
        // complement cells never overlap the union except on boundaries:
        // check midpoints of the complement's own decomposition
        const auto d = oracle::decompose(c);
        if (dim == 1) {
            for (std::size_t k = 0; k < d.cells_per_axis[0]; ++k) {
                if (d.widths[0][k] == 0) continue;
                const std::vector<Rational> mid{d.midpoints[0][k]};
                CHECK(oracle::point_in(c, mid) != oracle::point_in(u, mid));
            }
        }
    }
}

TEST_CASE("cross sections fix one axis and drop it") {
    const BoxUnion g = gluing_counterexample_set();
    // slice x1 = 1/4: lands in the first box only -> [0,1] x [0,2/3]
    const BoxUnion s = g.cross_section(0, Rational(1, 4));
    CHECK(s.dim() == 2);
    CHECK(s.measure() == Rational(2, 3));
    // slice x1 = 3/4: second box only -> [0,1/2] x [0,1]
    CHECK(g.cross_section(0, Rational(3, 4)).measure() == Rational(1, 2));
    // on the shared face both contribute
    CHECK(g.cross_section(0, Rational(1, 2)).measure() ==
          Rational(2, 3) + Rational(1, 2) - Rational(1, 3));
    CHECK_THROWS_AS(g.cross_section(3, Rational(1, 2)), ContractError);
    CHECK_THROWS_AS(g.cross_section(0, Rational(3, 2)), ContractError);
}

TEST_CASE("rasterize covers the cube and flags membership per cell") {
    const BoxUnion g = gluing_counterexample_set();
    const CellGrid grid = rasterize(g);
    REQUIRE(grid.widths.size() == 3);
    Rational inside_measure = 0, total = 0;
    for (std::size_t i = 0; i < grid.total_cells; ++i) {
        std::size_t rem = i;
        Rational w = 1;
        std::vector<Rational> mid(3);
        for (std::size_t a = 0; a < 3; ++a) {
            const std::size_t cell = rem / grid.stride[a];
            rem %= grid.stride[a];
            w *= grid.widths[a][cell];
            mid[a] = (grid.cuts[a][cell] + grid.cuts[a][cell + 1]) / 2;
        }
        total += w;
        if (grid.inside[i]) {
            inside_measure += w;
            CHECK(oracle::point_in(g, mid));
        } else {
            CHECK_FALSE(oracle::point_in(g, mid));
        }
    }
    CHECK(total == Rational(1));
    CHECK(inside_measure == Rational(7, 12));
}

TEST_CASE("cell caps guard grid explosions") {
    std::vector<Box> boxes;
    for (int i = 1; i <= 20; ++i) {
        Box b{{Rational(i, 100), Rational(i, 100), Rational(i, 100)},
              {Rational(i + 50, 100), Rational(i + 50, 100), Rational(i + 50, 100)}};
        boxes.push_back(b);
    }
    const BoxUnion u(3, boxes);
    CHECK_THROWS_AS(u.measure(100), SizeError);
    CHECK_NOTHROW(u.measure());
}

TEST_CASE("dimension zero and empty unions behave") {
    const BoxUnion empty(2);
    CHECK(empty.empty());
    CHECK(empty.measure() == Rational(0));
    CHECK_FALSE(empty.contains({Rational(1, 2), Rational(1, 2)}));
    const BoxUnion full = BoxUnion::full(2);
    CHECK(full.measure() == Rational(1));
    CHECK_THROWS_AS(BoxUnion(0), ContractError);
}
