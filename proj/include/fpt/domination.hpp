#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpt/box_union.hpp"
#include "fpt/graded_graph.hpp"
#include "fpt/growth.hpp"
#include "fpt/path_prob.hpp"

namespace fpt {

// Generation-count comparison for spherically symmetric trees: domination
// holds iff every cumulative offspring product is at least the other side's.
// The verdict is exact over [1..horizon] and silent about larger levels;
// table-only growth shorter than the horizon raises TableHorizonError.
struct SphericalDominationReport {
    bool dominates = false;
    std::optional<std::uint64_t> first_failing_level;
};

SphericalDominationReport dominates_spherical(const GrowthFunction& f, const GrowthFunction& g,
                                              std::uint64_t horizon);

// Height-2 trees, given as nonincreasing children partitions (zeros allowed,
// shorter side padded). Domination holds iff every tail sum of p weakly
// beats the matching tail sum of q. On failure the report carries the tail
// index k and the exponent r for a separating target set
// ([0,eps^r] x [0,1]) u ([0,1] x [0,eps]): for small enough eps the
// all-paths probability ordering reverses strictly on it.
struct Height2DominationReport {
    bool dominates = false;
    std::optional<std::size_t> violated_tail_index;
    std::optional<std::uint64_t> witness_exponent;
};

Height2DominationReport dominates_height2(const std::vector<std::uint64_t>& p,
                                          const std::vector<std::uint64_t>& q);

// One instance of the path-count lower bound on graded graphs:
//   1 - P(some full path lands in B)  >=  (1 - mu^n(B))^{#full paths}.
// Exact on both sides. Trees satisfy it with equality exactly when every
// branching happens at the root.
struct CountBoundCheck {
    Rational lhs;  // 1 - P(B;G)
    Rational rhs;  // (1 - mu^n(B))^K
    std::uint64_t full_paths = 0;
    bool holds = false;
};

CountBoundCheck check_count_bound(const GradedGraph& g, const BoxUnion& B,
                                  std::size_t cell_cap = kDefaultCellCap,
                                  std::size_t work_cap = kDefaultWorkCap);

}  // namespace fpt
