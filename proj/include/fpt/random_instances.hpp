#pragma once

#include <cstdint>
#include <vector>

#include "fpt/box_union.hpp"
#include "fpt/graded_graph.hpp"
#include "fpt/rng.hpp"
#include "fpt/tree.hpp"

namespace fpt {

// Bounded random instances for property tests and the conjecture scanner.
// Everything is a pure function of the stream position, so a seed pins the
// whole batch.

// Corners on the grid {j/d}: denominators drawn up to max_denominator.
BoxUnion random_box_union(RngStream& rng, std::size_t dim, std::size_t min_boxes,
                          std::size_t max_boxes, std::uint64_t max_denominator);

// Levels in [1..max_levels], level sizes in [1..3] capped by max_vertices
// total, each consecutive-level edge kept with probability ~0.6.
GradedGraph random_graded_graph(RngStream& rng, std::size_t max_levels, std::size_t max_vertices);

// Every non-bottom vertex gets 1..max_children children: uniform leaf depth
// by construction.
RootedTree random_uniform_depth_tree(RngStream& rng, std::uint32_t height,
                                     std::uint32_t max_children);

// Nonincreasing, first entry >= 1, remaining entries may be zero.
std::vector<std::uint64_t> random_partition(RngStream& rng, std::size_t max_len,
                                            std::uint64_t max_entry);

// uniform integer in [lo, hi] from the stream
std::uint64_t random_index(RngStream& rng, std::uint64_t lo, std::uint64_t hi);

}  // namespace fpt
