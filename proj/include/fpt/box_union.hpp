#pragma once

#include <cstdint>
#include <vector>

#include "fpt/rational.hpp"

namespace fpt {

inline constexpr std::size_t kDefaultCellCap = 1'000'000;

// Closed axis-aligned box inside [0,1]^n with rational corners.
struct Box {
    std::vector<Rational> lo, hi;

    std::size_t dim() const { return lo.size(); }
    void validate() const;
    Rational measure() const;
    bool contains(const std::vector<Rational>& point) const;
};

// Finite union of boxes in a common dimension. Unions may overlap; all
// measure-type queries run on the grid the breakpoints induce, so overlap
// never double-counts. Degenerate (zero-width) boxes are legal and vanish.
class BoxUnion {
  public:
    explicit BoxUnion(std::size_t dim, std::vector<Box> boxes = {});

    std::size_t dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }

    bool contains(const std::vector<Rational>& point) const;

    Rational measure(std::size_t cell_cap = kDefaultCellCap) const;

    // [0,1]^n minus this union, again as a box union (grid cells merged
    // along the last axis). Boundary cells land on whichever side keeps the
    // cover exact up to measure zero.
    BoxUnion complement(std::size_t cell_cap = kDefaultCellCap) const;

    // Fix coordinate `axis` (0-based) at x and drop it.
    BoxUnion cross_section(std::size_t axis, const Rational& x) const;

    static BoxUnion full(std::size_t dim);

  private:
    std::size_t dim_;
    std::vector<Box> boxes_;
};

// Grid induced by a union's breakpoints plus a row-major membership tensor
// (axis 0 slowest). This is the shared substrate of every exact evaluator.
struct CellGrid {
    std::vector<std::vector<Rational>> widths;  // per axis, per cell
    std::vector<std::size_t> cells_per_axis;
    std::vector<std::size_t> stride;  // row-major strides
    std::vector<char> inside;
    std::size_t total_cells = 0;
    std::vector<std::vector<Rational>> cuts;  // per axis, sorted, spans [0,1]
};

CellGrid rasterize(const BoxUnion& u, std::size_t cell_cap = kDefaultCellCap);

// The three-dimensional target set behind the generation-count counterexample:
// ([0,1/2] x [0,1] x [0,2/3])  union  ([1/2,1] x [0,1/2] x [0,1]), measure 7/12.
BoxUnion gluing_counterexample_set();

// Two-dimensional separating set for height-2 trees:
// ([0, eps^r] x [0,1])  union  ([0,1] x [0, eps]),  integer r >= 1, eps in (0,1).
BoxUnion height2_witness_set(std::uint64_t r, const Rational& eps);

}  // namespace fpt
