#include "fpt/path_prob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

struct WorkBudget {
    std::size_t left;
    void spend(std::size_t units) {
        if (units > left) throw SizeError("exact evaluation exceeds its work cap");
        left -= units;
    }
};

// Subtree isomorphism classes; uniform leaf depth makes the class determine
// the remaining recursion, so (class, cell offset) is a safe memo key.
std::vector<std::uint32_t> iso_classes(const RootedTree& t) {
    std::vector<std::uint32_t> cls(t.size());
    std::map<std::vector<std::uint32_t>, std::uint32_t> intern;
    // children always carry larger ids, so reverse order is bottom-up
    for (std::uint32_t v = static_cast<std::uint32_t>(t.size()); v-- > 0;) {
        std::vector<std::uint32_t> key;
        key.reserve(t.children(v).size());
        for (const std::uint32_t w : t.children(v)) key.push_back(cls[w]);
        std::sort(key.begin(), key.end());
        cls[v] = intern.emplace(std::move(key), static_cast<std::uint32_t>(intern.size()))
                     .first->second;
    }
    return cls;
}

struct PairHash {
    std::size_t operator()(const std::pair<std::uint32_t, std::size_t>& p) const {
        return std::hash<std::size_t>()(p.second * 0x9E3779B97F4A7C15ULL + p.first);
    }
};

}  // namespace

ExactProb tree_all_paths_prob(const RootedTree& t, const BoxUnion& D, std::size_t cell_cap,
                              std::size_t work_cap) {
    const std::uint32_t h = t.height();
    if (h == 0) throw ContractError("all-paths probability needs a tree of height >= 1");
    if (D.dim() != h)
        throw ContractError("target set dimension " + std::to_string(D.dim()) +
                            " does not match tree height " + std::to_string(h));
    if (!t.uniform_depth())
        throw ContractError("tree has leaves above the bottom level; full-depth paths undefined");

    const CellGrid g = rasterize(D, cell_cap);
    const auto cls = iso_classes(t);
    WorkBudget budget{work_cap};
    std::unordered_map<std::pair<std::uint32_t, std::size_t>, Rational, PairHash> memo;

    // prob that all paths below v land in D, given ancestors fixed to the
    // cells encoded in `offset`
    auto eval = [&](auto&& self, std::uint32_t v, std::size_t offset) -> Rational {
        if (t.depth(v) == h) return g.inside[offset] ? Rational(1) : Rational(0);
        const std::pair<std::uint32_t, std::size_t> key{cls[v], offset};
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        const std::size_t axis = t.depth(v);  // children's labels live on this axis
        Rational prod(1);
        for (const std::uint32_t w : t.children(v)) {
            budget.spend(g.cells_per_axis[axis]);
            Rational sum(0);
            for (std::size_t c = 0; c < g.cells_per_axis[axis]; ++c) {
                const Rational part = self(self, w, offset + c * g.stride[axis]);
                if (!part.is_zero()) sum += g.widths[axis][c] * part;
            }
            prod *= sum;
            if (prod.is_zero()) break;
        }
        memo.emplace(key, prod);
        return prod;
    };
    return ExactProb(eval(eval, 0, 0));
}

ExactProb tree_some_path_prob(const RootedTree& t, const BoxUnion& B, std::size_t cell_cap,
                              std::size_t work_cap) {
    const Rational miss = tree_all_paths_prob(t, B.complement(cell_cap), cell_cap, work_cap);
    return ExactProb(1 - miss);
}

namespace {

std::vector<BigInt> spherical_exponents(const std::vector<BigInt>& b) {
    if (b.empty()) throw ContractError("generation vector is empty");
    std::vector<BigInt> f;
    BigInt prev(1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1) throw ContractError("generation sizes must be >= 1");
        if (b[i] % prev != 0)
            throw ContractError(
                "generation ratio " + b[i].str() + "/" + prev.str() +
                " is not an integer, so no spherical tree has these generation sizes; "
                "use spherical_all_paths_prob_real for the real-argument extension");
        f.push_back(b[i] / prev);
        prev = b[i];
    }
    return f;
}

}  // namespace

ExactProb spherical_all_paths_prob(const std::vector<BigInt>& b, const BoxUnion& D,
                                   std::size_t cell_cap) {
    const std::vector<BigInt> f = spherical_exponents(b);
    if (D.dim() != b.size())
        throw ContractError("target set dimension " + std::to_string(D.dim()) +
                            " does not match generation vector length " + std::to_string(b.size()));
    constexpr std::uint64_t kExponentCap = 1'000'000;
    for (const BigInt& e : f)
        if (e > kExponentCap)
            throw SizeError("offspring exponent " + e.str() + " exceeds exact-power cap of " +
                            std::to_string(kExponentCap));

    const CellGrid g = rasterize(D, cell_cap);
    const std::size_t n = b.size();
    auto eval = [&](auto&& self, std::size_t axis, std::size_t offset) -> Rational {
        if (axis == n) return g.inside[offset] ? Rational(1) : Rational(0);
        Rational sum(0);
        for (std::size_t c = 0; c < g.cells_per_axis[axis]; ++c) {
            const Rational part = self(self, axis + 1, offset + c * g.stride[axis]);
            if (!part.is_zero()) sum += g.widths[axis][c] * part;
        }
        return rational_pow(sum, f[axis].convert_to<unsigned long>());
    };
    return ExactProb(eval(eval, 0, 0));
}

ExactProb spherical_all_paths_prob(const std::vector<std::uint64_t>& b, const BoxUnion& D,
                                   std::size_t cell_cap) {
    std::vector<BigInt> big(b.begin(), b.end());
    return spherical_all_paths_prob(big, D, cell_cap);
}

double spherical_all_paths_prob_real(const std::vector<double>& b, const BoxUnion& D,
                                     std::size_t cell_cap) {
    if (b.empty()) throw ContractError("generation vector is empty");
    for (const double x : b)
        if (!(x > 0)) throw ContractError("real generation sizes must be > 0");
    if (D.dim() != b.size())
        throw ContractError("target set dimension " + std::to_string(D.dim()) +
                            " does not match generation vector length " + std::to_string(b.size()));

    const CellGrid g = rasterize(D, cell_cap);
    const std::size_t n = b.size();
    auto eval = [&](auto&& self, std::size_t axis, std::size_t offset) -> double {
        if (axis == n) return g.inside[offset] ? 1.0 : 0.0;
        double sum = 0;
        for (std::size_t c = 0; c < g.cells_per_axis[axis]; ++c) {
            const double part = self(self, axis + 1, offset + c * g.stride[axis]);
            if (part != 0) sum += g.widths[axis][c].convert_to<double>() * part;
        }
        const double e = axis == 0 ? b[0] : b[axis] / b[axis - 1];
        return std::pow(sum, e);
    };
    return eval(eval, 0, 0);
}

ExactProb graded_all_paths_prob(const GradedGraph& gg, const BoxUnion& D, std::size_t cell_cap,
                                std::size_t work_cap) {
    gg.validate();
    const std::size_t n = gg.num_levels();
    if (D.dim() != n)
        throw ContractError("target set dimension " + std::to_string(D.dim()) +
                            " does not match graded graph level count " + std::to_string(n));
    const CellGrid g = rasterize(D, cell_cap);
    const auto paths = gg.full_paths(work_cap);

    // One level's vertices decouple once every other level is pinned to
    // cells: each decoupled vertex just needs its label inside the
    // intersection of its paths' slices. Freeing the largest of the two end
    // levels keeps the enumeration smallest.
    const std::size_t free_level = gg.level_sizes[n - 1] > gg.level_sizes[0] ? n - 1 : 0;
    if (g.cells_per_axis[free_level] > 64)
        throw SizeError("free-level axis exceeds 64 cells; target set too fine for the scanner");
    const std::uint64_t full_mask =
        g.cells_per_axis[free_level] == 64 ? ~0ULL : (1ULL << g.cells_per_axis[free_level]) - 1;

    struct Pinned {
        std::size_t level;
        std::uint32_t vertex;
    };
    std::vector<Pinned> pinned;
    double assignments = 1;
    for (std::size_t l = 0; l < n; ++l) {
        if (l == free_level) continue;
        for (std::uint32_t v = 0; v < gg.level_sizes[l]; ++v) pinned.push_back({l, v});
        assignments *= std::pow(static_cast<double>(g.cells_per_axis[l]),
                                static_cast<double>(gg.level_sizes[l]));
    }
    if (assignments > static_cast<double>(work_cap))
        throw SizeError("graded-graph cell enumeration exceeds its work cap");

    std::unordered_map<std::size_t, std::uint64_t> slice_mask;  // offset -> allowed free cells
    auto mask_for_offset = [&](std::size_t offset) {
        if (const auto it = slice_mask.find(offset); it != slice_mask.end()) return it->second;
        std::uint64_t m = 0;
        for (std::size_t c = 0; c < g.cells_per_axis[free_level]; ++c)
            if (g.inside[offset + c * g.stride[free_level]]) m |= 1ULL << c;
        slice_mask.emplace(offset, m);
        return m;
    };
    std::unordered_map<std::uint64_t, Rational> mask_measure;
    auto measure_of_mask = [&](std::uint64_t m) {
        if (const auto it = mask_measure.find(m); it != mask_measure.end()) return it->second;
        Rational r(0);
        for (std::size_t c = 0; c < g.cells_per_axis[free_level]; ++c)
            if (m & (1ULL << c)) r += g.widths[free_level][c];
        mask_measure.emplace(m, r);
        return r;
    };

    std::vector<std::size_t> cell(pinned.size(), 0);
    std::vector<std::uint64_t> vertex_mask(gg.level_sizes[free_level]);
    Rational total(0);
    for (bool more = true; more;) {
        Rational weight(1);
        for (std::size_t i = 0; i < pinned.size(); ++i)
            weight *= g.widths[pinned[i].level][cell[i]];
        if (!weight.is_zero()) {
            std::fill(vertex_mask.begin(), vertex_mask.end(), full_mask);
            for (const auto& path : paths) {
                std::size_t offset = 0;
                for (std::size_t i = 0; i < pinned.size(); ++i)
                    if (path[pinned[i].level] == pinned[i].vertex)
                        offset += cell[i] * g.stride[pinned[i].level];
                vertex_mask[path[free_level]] &= mask_for_offset(offset);
            }
            Rational prod = weight;
            for (const std::uint64_t m : vertex_mask) {
                if (m == 0) {
                    prod = 0;
                    break;
                }
                prod *= measure_of_mask(m);
            }
            total += prod;
        }
        more = false;
        for (std::size_t i = pinned.size(); i-- > 0;) {
            if (++cell[i] < g.cells_per_axis[pinned[i].level]) {
                more = true;
                break;
            }
            cell[i] = 0;
        }
    }
    return ExactProb(total);
}

ExactProb graded_some_path_prob(const GradedGraph& gg, const BoxUnion& B, std::size_t cell_cap,
                                std::size_t work_cap) {
    const Rational miss = graded_all_paths_prob(gg, B.complement(cell_cap), cell_cap, work_cap);
    return ExactProb(1 - miss);
}

}  // namespace fpt
