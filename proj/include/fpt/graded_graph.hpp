#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fpt/tree.hpp"

namespace fpt {

// Finite graded graph: vertices arranged in levels 1..n, edges only between
// consecutive levels, oriented upward. Vertices are (level, index) pairs;
// edges[l] connects level l+1 to level l+2 (0-based storage).
struct GradedGraph {
    std::vector<std::uint32_t> level_sizes;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges;

    std::size_t num_levels() const { return level_sizes.size(); }
    std::size_t num_vertices() const;

    // checks level/edge coherence, throws ContractError on violation
    void validate() const;

    // Number of oriented paths visiting every level (one vertex per level).
    std::uint64_t count_full_paths() const;

    // All full paths as per-level vertex indices. Throws SizeError past `cap`.
    std::vector<std::vector<std::uint32_t>> full_paths(std::size_t cap = 1000000) const;

    // A tree is a graded graph with levels = generations.
    static GradedGraph from_tree(const RootedTree& t);
};

}  // namespace fpt
