#include "fpt/graded_graph.hpp"

#include <numeric>
#include <string>

#include "fpt/errors.hpp"

namespace fpt {

std::size_t GradedGraph::num_vertices() const {
    return std::accumulate(level_sizes.begin(), level_sizes.end(), std::size_t{0});
}

void GradedGraph::validate() const {
    if (level_sizes.empty()) throw ContractError("graded graph needs at least one level");
    for (std::size_t l = 0; l < level_sizes.size(); ++l)
        if (level_sizes[l] == 0)
            throw ContractError("graded graph level " + std::to_string(l + 1) + " is empty");
    if (edges.size() + 1 != level_sizes.size())
        throw ContractError("graded graph needs exactly one edge set per consecutive level pair");
    for (std::size_t l = 0; l < edges.size(); ++l)
        for (const auto& [a, b] : edges[l])
            if (a >= level_sizes[l] || b >= level_sizes[l + 1])
                throw ContractError("graded graph edge endpoint out of range between levels " +
                                    std::to_string(l + 1) + " and " + std::to_string(l + 2));
}

std::uint64_t GradedGraph::count_full_paths() const {
    validate();
    std::vector<std::uint64_t> ways(level_sizes[0], 1);
    for (std::size_t l = 0; l < edges.size(); ++l) {
        std::vector<std::uint64_t> next(level_sizes[l + 1], 0);
        for (const auto& [a, b] : edges[l]) {
            const std::uint64_t sum = next[b] + ways[a];
            if (sum < next[b]) throw SizeError("full path count overflows 64 bits");
            next[b] = sum;
        }
        ways = std::move(next);
    }
    return std::accumulate(ways.begin(), ways.end(), std::uint64_t{0});
}

std::vector<std::vector<std::uint32_t>> GradedGraph::full_paths(std::size_t cap) const {
    validate();
    // adjacency per level for forward extension
    std::vector<std::vector<std::vector<std::uint32_t>>> adj(edges.size());
    for (std::size_t l = 0; l < edges.size(); ++l) {
        adj[l].resize(level_sizes[l]);
        for (const auto& [a, b] : edges[l]) adj[l][a].push_back(b);
    }
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> path(num_levels());
    auto extend = [&](auto&& self, std::size_t level) -> void {
        if (level == num_levels()) {
            if (out.size() >= cap)
                throw SizeError("full path enumeration exceeds cap of " + std::to_string(cap));
            out.push_back(path);
            return;
        }
        if (level == 0) {
            for (std::uint32_t v = 0; v < level_sizes[0]; ++v) {
                path[0] = v;
                self(self, 1);
            }
        } else {
            for (const std::uint32_t w : adj[level - 1][path[level - 1]]) {
                path[level] = w;
                self(self, level + 1);
            }
        }
    };
    extend(extend, 0);
    return out;
}

GradedGraph GradedGraph::from_tree(const RootedTree& t) {
    const std::uint32_t h = t.height();
    if (h == 0) throw ContractError("cannot grade a single-vertex tree");
    GradedGraph g;
    g.level_sizes.assign(h, 0);
    std::vector<std::uint32_t> index_in_level(t.size(), 0);
    for (std::uint32_t v = 1; v < t.size(); ++v)
        index_in_level[v] = g.level_sizes[t.depth(v) - 1]++;
    g.edges.resize(h == 0 ? 0 : h - 1);
    for (std::uint32_t v = 1; v < t.size(); ++v) {
        const std::uint32_t p = t.parent(v);
        if (p != 0) g.edges[t.depth(v) - 2].push_back({index_in_level[p], index_in_level[v]});
    }
    return g;
}

}  // namespace fpt
