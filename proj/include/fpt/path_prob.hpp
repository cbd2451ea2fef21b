#pragma once

#include <cstdint>
#include <vector>

#include "fpt/box_union.hpp"
#include "fpt/graded_graph.hpp"
#include "fpt/rational.hpp"
#include "fpt/tree.hpp"

namespace fpt {

inline constexpr std::size_t kDefaultWorkCap = 50'000'000;

// Probability that in the spherically symmetric tree with generation sizes
// b[0], b[1], ..., every root-to-bottom path's label vector lies in D
// (labels i.i.d. uniform on [0,1], one coordinate per level).
//
// Exact variant: requires b[0] and every consecutive ratio b[i+1]/b[i] to be
// a positive integer, i.e. b must be realizable spherically; anything else
// is a contract error pointing at spherical_all_paths_prob_real.
ExactProb spherical_all_paths_prob(const std::vector<BigInt>& b, const BoxUnion& D,
                                   std::size_t cell_cap = kDefaultCellCap);
ExactProb spherical_all_paths_prob(const std::vector<std::uint64_t>& b, const BoxUnion& D,
                                   std::size_t cell_cap = kDefaultCellCap);

// Real-argument extension of the same recursion: any positive vector b,
// fractional exponents allowed. Monotone nonincreasing in each coordinate,
// log-convex, and homogeneous of degree one in b; those properties are what
// the tests pin down.
double spherical_all_paths_prob_real(const std::vector<double>& b, const BoxUnion& D,
                                     std::size_t cell_cap = kDefaultCellCap);

// Probability that every root-to-bottom path of t lands in D. Requires every
// leaf at depth equal to D's dimension (ragged trees are rejected). Shared
// ancestors make the per-path events dependent; the recursion conditions on
// grid cells level by level, memoized across isomorphic subtrees.
ExactProb tree_all_paths_prob(const RootedTree& t, const BoxUnion& D,
                              std::size_t cell_cap = kDefaultCellCap,
                              std::size_t work_cap = kDefaultWorkCap);

// Probability that at least one root-to-bottom path lands in B.
ExactProb tree_some_path_prob(const RootedTree& t, const BoxUnion& B,
                              std::size_t cell_cap = kDefaultCellCap,
                              std::size_t work_cap = kDefaultWorkCap);

// Graded-graph analogues over oriented full paths (one vertex per level,
// shared vertices share their label). Exact cell enumeration; meant for
// small instances, guarded by work caps.
ExactProb graded_all_paths_prob(const GradedGraph& g, const BoxUnion& D,
                                std::size_t cell_cap = kDefaultCellCap,
                                std::size_t work_cap = kDefaultWorkCap);
ExactProb graded_some_path_prob(const GradedGraph& g, const BoxUnion& B,
                                std::size_t cell_cap = kDefaultCellCap,
                                std::size_t work_cap = kDefaultWorkCap);

}  // namespace fpt
