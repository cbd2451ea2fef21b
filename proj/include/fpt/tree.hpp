#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fpt/growth.hpp"

namespace fpt {

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

// Finite rooted tree, vertex 0 the root, children kept in insertion order.
// Sized for the exact-probability engines (thousands of vertices), not for
// simulation fronts, which use implicit level indexing instead.
class RootedTree {
  public:
    RootedTree() : parent_{0}, depth_{0}, children_(1) {}

    std::uint32_t add_child(std::uint32_t parent, std::size_t vertex_cap = kDefaultVertexCap);

    std::size_t size() const { return parent_.size(); }
    std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
    std::uint32_t depth(std::uint32_t v) const { return depth_[v]; }
    const std::vector<std::uint32_t>& children(std::uint32_t v) const { return children_[v]; }
    std::uint32_t height() const;

    // |G_1|, ..., |G_height|
    std::vector<std::uint64_t> generation_sizes() const;

    // true when every leaf sits at depth == height (no ragged levels)
    bool uniform_depth() const;

  private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::vector<std::uint32_t>> children_;
};

// Spherically symmetric tree: every vertex at depth n-1 gets f(n) children.
RootedTree build_spherical(const GrowthFunction& f, std::size_t depth,
                           std::size_t vertex_cap = kDefaultVertexCap);

// k disjoint paths of length n glued at the root.
RootedTree build_paths_tree(std::size_t n, std::size_t k,
                            std::size_t vertex_cap = kDefaultVertexCap);

// The height-3 pair with generation sizes (2,3,5) and (1,3,5): the first tree
// beats the second on every generation count yet fails to dominate it (the
// two-box target set exposes the gap). First element: the (2,3,5) tree.
std::pair<RootedTree, RootedTree> gluing_example_trees();

// Children counts of the depth-1 vertices, sorted nonincreasing. Entries may
// be zero. Accepts trees of height 1 (all zeros) or 2; other heights are a
// contract error.
std::vector<std::uint64_t> children_partition(const RootedTree& t);

// Root with one child per positive partition entry, carrying that many
// leaves. Zero entries denote absent subtrees and are skipped (a vertex
// without grandchildren contributes no full-depth paths either way).
RootedTree build_height2_tree(const std::vector<std::uint64_t>& partition,
                              std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace fpt
