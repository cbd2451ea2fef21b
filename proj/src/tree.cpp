#include "fpt/tree.hpp"

#include <algorithm>
#include <string>

#include "fpt/errors.hpp"

namespace fpt {

std::uint32_t RootedTree::add_child(std::uint32_t parent, std::size_t vertex_cap) {
    if (parent >= parent_.size()) throw ContractError("add_child: no such parent vertex");
    if (parent_.size() >= vertex_cap)
        throw SizeError("tree vertex count would exceed cap of " + std::to_string(vertex_cap));
    const auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(parent);
    depth_.push_back(depth_[parent] + 1);
    children_.emplace_back();
    children_[parent].push_back(id);
    return id;
}

std::uint32_t RootedTree::height() const {
    return *std::max_element(depth_.begin(), depth_.end());
}

std::vector<std::uint64_t> RootedTree::generation_sizes() const {
    std::vector<std::uint64_t> sizes(height(), 0);
    for (std::size_t v = 1; v < parent_.size(); ++v) ++sizes[depth_[v] - 1];
    return sizes;
}

bool RootedTree::uniform_depth() const {
    const std::uint32_t h = height();
    for (std::size_t v = 0; v < parent_.size(); ++v)
        if (children_[v].empty() && depth_[v] != h) return false;
    return true;
}

RootedTree build_spherical(const GrowthFunction& f, std::size_t depth, std::size_t vertex_cap) {
    RootedTree t;
    std::vector<std::uint32_t> frontier{0};
    for (std::size_t n = 1; n <= depth; ++n) {
        const std::uint64_t count = f.value(n);
        if (frontier.size() > vertex_cap / std::max<std::uint64_t>(count, 1))
            throw SizeError("spherical tree exceeds vertex cap of " + std::to_string(vertex_cap) +
                            " at level " + std::to_string(n));
        std::vector<std::uint32_t> next;
        next.reserve(frontier.size() * count);
        for (const std::uint32_t v : frontier)
            for (std::uint64_t j = 0; j < count; ++j) next.push_back(t.add_child(v, vertex_cap));
        frontier = std::move(next);
    }
    return t;
}

RootedTree build_paths_tree(std::size_t n, std::size_t k, std::size_t vertex_cap) {
    if (n == 0) throw ContractError("paths tree needs length >= 1");
    RootedTree t;
    for (std::size_t p = 0; p < k; ++p) {
        std::uint32_t v = 0;
        for (std::size_t d = 0; d < n; ++d) v = t.add_child(v, vertex_cap);
    }
    return t;
}

std::pair<RootedTree, RootedTree> gluing_example_trees() {
    RootedTree a;  // generation sizes (2,3,5)
    const auto a1 = a.add_child(0);
    const auto a2 = a.add_child(0);
    const auto m = a.add_child(a1);  // lone middle vertex carrying a triple
    a.add_child(m);
    a.add_child(m);
    a.add_child(m);
    const auto p = a.add_child(a2);
    const auto q = a.add_child(a2);
    a.add_child(p);
    a.add_child(q);

    RootedTree b;  // generation sizes (1,3,5)
    const auto s = b.add_child(0);
    const auto d1 = b.add_child(s);
    const auto d2 = b.add_child(s);
    const auto d3 = b.add_child(s);
    b.add_child(d1);
    b.add_child(d1);
    b.add_child(d1);
    b.add_child(d2);
    b.add_child(d3);
    return {std::move(a), std::move(b)};
}

std::vector<std::uint64_t> children_partition(const RootedTree& t) {
    const std::uint32_t h = t.height();
    if (h == 0 || h > 2)
        throw ContractError("children_partition needs a tree of height 1 or 2, got height " +
                            std::to_string(h));
    std::vector<std::uint64_t> part;
    for (const std::uint32_t v : t.children(0)) part.push_back(t.children(v).size());
    std::sort(part.begin(), part.end(), std::greater<>());
    return part;
}

RootedTree build_height2_tree(const std::vector<std::uint64_t>& partition, std::size_t vertex_cap) {
    RootedTree t;
    bool any = false;
    for (const std::uint64_t c : partition) {
        if (c == 0) continue;
        any = true;
        const auto v = t.add_child(0, vertex_cap);
        for (std::uint64_t j = 0; j < c; ++j) t.add_child(v, vertex_cap);
    }
    if (!any) throw ContractError("height-2 tree needs at least one positive partition entry");
    return t;
}

}  // namespace fpt
