#include "fpt/box_union.hpp"

#include <algorithm>
#include <string>

#include "fpt/errors.hpp"

namespace fpt {

void Box::validate() const {
    if (lo.size() != hi.size()) throw ContractError("box corner dimensions differ");
    if (lo.empty()) throw ContractError("box needs dimension >= 1");
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i] < 0 || hi[i] > 1)
            throw ContractError("box coordinate " + std::to_string(i) + " leaves [0,1]");
        if (lo[i] > hi[i])
            throw ContractError("box coordinate " + std::to_string(i) + " has lo > hi");
    }
}

Rational Box::measure() const {
    Rational m(1);
    for (std::size_t i = 0; i < lo.size(); ++i) m *= hi[i] - lo[i];
    return m;
}

bool Box::contains(const std::vector<Rational>& point) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (point[i] < lo[i] || point[i] > hi[i]) return false;
    return true;
}

BoxUnion::BoxUnion(std::size_t dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
    if (dim_ == 0) throw ContractError("box union needs dimension >= 1");
    for (const Box& b : boxes_) {
        b.validate();
        if (b.dim() != dim_) throw ContractError("box dimension does not match union dimension");
    }
}

bool BoxUnion::contains(const std::vector<Rational>& point) const {
    if (point.size() != dim_) throw ContractError("point dimension does not match union");
    for (const Box& b : boxes_)
        if (b.contains(point)) return true;
    return false;
}

BoxUnion BoxUnion::full(std::size_t dim) {
    Box b;
    b.lo.assign(dim, Rational(0));
    b.hi.assign(dim, Rational(1));
    return BoxUnion(dim, {std::move(b)});
}

CellGrid rasterize(const BoxUnion& u, std::size_t cell_cap) {
    const std::size_t n = u.dim();
    CellGrid g;
    g.cuts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& cuts = g.cuts[i];
        cuts.push_back(Rational(0));
        cuts.push_back(Rational(1));
        for (const Box& b : u.boxes()) {
            cuts.push_back(b.lo[i]);
            cuts.push_back(b.hi[i]);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    }
    g.cells_per_axis.resize(n);
    g.widths.resize(n);
    g.total_cells = 1;
    for (std::size_t i = 0; i < n; ++i) {
        g.cells_per_axis[i] = g.cuts[i].size() - 1;
        for (std::size_t c = 0; c + 1 < g.cuts[i].size(); ++c)
            g.widths[i].push_back(g.cuts[i][c + 1] - g.cuts[i][c]);
        if (g.total_cells > cell_cap / g.cells_per_axis[i])
            throw SizeError("grid decomposition exceeds cell cap of " + std::to_string(cell_cap));
        g.total_cells *= g.cells_per_axis[i];
    }
    g.stride.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) g.stride[i - 1] = g.stride[i] * g.cells_per_axis[i];
    g.inside.assign(g.total_cells, 0);

    // cells are either wholly inside a box or disjoint from its interior,
    // since every box corner is a cut; compare cut intervals directly
    std::vector<std::size_t> first(n), last(n), idx(n);
    for (const Box& b : u.boxes()) {
        bool degenerate = false;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& cuts = g.cuts[i];
            first[i] = static_cast<std::size_t>(
                std::lower_bound(cuts.begin(), cuts.end(), b.lo[i]) - cuts.begin());
            last[i] = static_cast<std::size_t>(
                std::lower_bound(cuts.begin(), cuts.end(), b.hi[i]) - cuts.begin());
            if (first[i] >= last[i]) degenerate = true;  // zero width along this axis
        }
        if (degenerate) continue;
        idx = first;
        for (bool more = true; more;) {
            std::size_t flat = 0;
            for (std::size_t i = 0; i < n; ++i) flat += idx[i] * g.stride[i];
            g.inside[flat] = 1;
            more = false;
            for (std::size_t axis = n; axis-- > 0;) {
                if (++idx[axis] < last[axis]) {
                    more = true;
                    break;
                }
                idx[axis] = first[axis];
            }
        }
    }
    return g;
}

Rational BoxUnion::measure(std::size_t cell_cap) const {
    if (boxes_.empty()) return Rational(0);
    const CellGrid g = rasterize(*this, cell_cap);
    Rational total(0);
    std::vector<std::size_t> idx(dim_, 0);
    for (std::size_t flat = 0; flat < g.total_cells; ++flat) {
        if (g.inside[flat]) {
            Rational w(1);
            std::size_t rem = flat;
            for (std::size_t i = 0; i < dim_; ++i) {
                w *= g.widths[i][rem / g.stride[i]];
                rem %= g.stride[i];
            }
            total += w;
        }
    }
    return total;
}

BoxUnion BoxUnion::complement(std::size_t cell_cap) const {
    if (boxes_.empty()) return full(dim_);
    const CellGrid g = rasterize(*this, cell_cap);
    std::vector<Box> out;
    // emit runs of outside cells along the last axis
    const std::size_t lastN = g.cells_per_axis[dim_ - 1];
    for (std::size_t base = 0; base < g.total_cells; base += lastN) {
        std::size_t c = 0;
        while (c < lastN) {
            if (g.inside[base + c]) {
                ++c;
                continue;
            }
            std::size_t end = c;
            while (end < lastN && !g.inside[base + end]) ++end;
            Box b;
            std::size_t rem = base;
            for (std::size_t i = 0; i + 1 < dim_; ++i) {
                const std::size_t k = rem / g.stride[i];
                rem %= g.stride[i];
                b.lo.push_back(g.cuts[i][k]);
                b.hi.push_back(g.cuts[i][k + 1]);
            }
            b.lo.push_back(g.cuts[dim_ - 1][c]);
            b.hi.push_back(g.cuts[dim_ - 1][end]);
            out.push_back(std::move(b));
            c = end;
        }
    }
    return BoxUnion(dim_, std::move(out));
}

BoxUnion BoxUnion::cross_section(std::size_t axis, const Rational& x) const {
    if (axis >= dim_) throw ContractError("cross-section axis out of range");
    if (dim_ == 1) throw ContractError("cross-section of a one-dimensional union is a point");
    if (x < 0 || x > 1) throw ContractError("cross-section coordinate leaves [0,1]");
    std::vector<Box> out;
    for (const Box& b : boxes_) {
        if (x < b.lo[axis] || x > b.hi[axis]) continue;
        Box s;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == axis) continue;
            s.lo.push_back(b.lo[i]);
            s.hi.push_back(b.hi[i]);
        }
        out.push_back(std::move(s));
    }
    return BoxUnion(dim_ - 1, std::move(out));
}

BoxUnion gluing_counterexample_set() {
    const Rational half(1, 2), two_thirds(2, 3), one(1), zero(0);
    Box b1{{zero, zero, zero}, {half, one, two_thirds}};
    Box b2{{half, zero, zero}, {one, half, one}};
    return BoxUnion(3, {std::move(b1), std::move(b2)});
}

BoxUnion height2_witness_set(std::uint64_t r, const Rational& eps) {
    if (r < 1) throw ContractError("witness exponent r must be >= 1");
    if (eps <= 0 || eps >= 1) throw ContractError("witness eps must lie in (0,1)");
    const Rational zero(0), one(1);
    Box narrow{{zero, zero}, {rational_pow(eps, r), one}};
    Box strip{{zero, zero}, {one, eps}};
    return BoxUnion(2, {std::move(narrow), std::move(strip)});
}

}  // namespace fpt
