#include "fpt/random_instances.hpp"

#include <algorithm>

#include "fpt/errors.hpp"

namespace fpt {

std::uint64_t random_index(RngStream& rng, std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw ContractError("random_index: empty range");
    const std::uint64_t span = hi - lo + 1;
    return lo + rng.next_u64() % span;  // span is tiny here; modulo bias immaterial
}

BoxUnion random_box_union(RngStream& rng, std::size_t dim, std::size_t min_boxes,
                          std::size_t max_boxes, std::uint64_t max_denominator) {
    const std::size_t count = random_index(rng, min_boxes, max_boxes);
    std::vector<Box> boxes;
    boxes.reserve(count);
    for (std::size_t b = 0; b < count; ++b) {
        Box box;
        for (std::size_t i = 0; i < dim; ++i) {
            const std::uint64_t den = random_index(rng, 1, max_denominator);
            std::uint64_t a = random_index(rng, 0, den);
            std::uint64_t c = random_index(rng, 0, den);
            if (a > c) std::swap(a, c);
            box.lo.push_back(Rational(a, den));
            box.hi.push_back(Rational(c, den));
        }
        boxes.push_back(std::move(box));
    }
    return BoxUnion(dim, std::move(boxes));
}

GradedGraph random_graded_graph(RngStream& rng, std::size_t max_levels, std::size_t max_vertices) {
    GradedGraph g;
    const std::size_t levels = random_index(rng, 1, max_levels);
    std::size_t budget = max_vertices;
    for (std::size_t l = 0; l < levels; ++l) {
        if (budget == 0) break;
        const std::uint32_t size =
            static_cast<std::uint32_t>(random_index(rng, 1, std::min<std::size_t>(3, budget)));
        g.level_sizes.push_back(size);
        budget -= size;
    }
    g.edges.resize(g.level_sizes.size() - 1);
    for (std::size_t l = 0; l + 1 < g.level_sizes.size(); ++l)
        for (std::uint32_t a = 0; a < g.level_sizes[l]; ++a)
            for (std::uint32_t b = 0; b < g.level_sizes[l + 1]; ++b)
                if (rng.next_unit() < 0.6) g.edges[l].push_back({a, b});
    return g;
}

RootedTree random_uniform_depth_tree(RngStream& rng, std::uint32_t height,
                                     std::uint32_t max_children) {
    if (height == 0 || max_children == 0)
        throw ContractError("random tree needs height >= 1 and max_children >= 1");
    RootedTree t;
    std::vector<std::uint32_t> frontier{0};
    for (std::uint32_t d = 0; d < height; ++d) {
        std::vector<std::uint32_t> next;
        for (const std::uint32_t v : frontier) {
            const std::uint64_t c = random_index(rng, 1, max_children);
            for (std::uint64_t j = 0; j < c; ++j) next.push_back(t.add_child(v));
        }
        frontier = std::move(next);
    }
    return t;
}

std::vector<std::uint64_t> random_partition(RngStream& rng, std::size_t max_len,
                                            std::uint64_t max_entry) {
    const std::size_t len = random_index(rng, 1, max_len);
    std::vector<std::uint64_t> part(len);
    part[0] = random_index(rng, 1, max_entry);
    for (std::size_t i = 1; i < len; ++i) part[i] = random_index(rng, 0, max_entry);
    std::sort(part.begin(), part.end(), std::greater<>());
    return part;
}

}  // namespace fpt
