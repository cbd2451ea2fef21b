#pragma once

#include <cstdint>
#include <vector>

#include "fpt/growth.hpp"

namespace fpt {

// The regularization f -> f~ replaces the running product of f by its
// greatest convex minorant in log domain: f~(n) is the minorant's increment
// at n, the largest "effective offspring rate" certified by products of f
// alone. Two routes compute it (geometric hull, direct recursive infima);
// they agree where the window has settled.
//
// Values live on [1..window]; the analysis reads f up to window + slack
// (and further, to certify stability). A `stable` flag per index records
// that extending the analyzed horizon cannot move that value any more:
// exact for tails whose log increments become constant, horizon-doubling
// agreement otherwise, full-table agreement for table-only growth.
struct RegularizedGrowth {
    std::size_t window = 0;
    std::size_t analyzed_horizon = 0;       // largest f-index the values used
    std::vector<double> log_values;          // ln f~(n), n = 1..window
    std::vector<double> minorant_cumulative; // minorant at 0..window
    std::vector<char> stable_flags;

    double log_value(std::size_t n) const;  // 1-based
    double value(std::size_t n) const;
    bool is_stable(std::size_t n) const;
    bool all_stable() const;
};

RegularizedGrowth regularize_hull(const GrowthFunction& f, std::size_t window, std::size_t slack);

RegularizedGrowth regularize_recursive(const GrowthFunction& f, std::size_t window,
                                       std::size_t slack);

// Hull route with the natural slack: the window itself for tail rules,
// whatever the table still holds for table-only growth (which must at least
// reach the window).
RegularizedGrowth regularize_default(const GrowthFunction& f, std::size_t window);

// Log-domain core on a raw finite table (real-valued entries welcome):
// returns the minorant increments for the whole table. This is what makes
// "regularize then raise to a power" and "raise then regularize" literally
// the same computation up to scaling.
std::vector<double> hull_log_increments(const std::vector<double>& log_f);

// Indices n in [1..window] where the running product of f~ equals the
// running product of f (minorant contact points). Requires every index in
// the window stable.
std::vector<std::size_t> equal_product_indices(const GrowthFunction& f, std::size_t window,
                                               std::size_t slack);

}  // namespace fpt
