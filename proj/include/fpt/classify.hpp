#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fpt/growth.hpp"
#include "fpt/regularized.hpp"

namespace fpt {

// Passage times have distribution G with G(t) ~ c * t^alpha near 0. The
// process reaches infinity in finite time (explosion) iff
// sum_n f~(n)^(-1/alpha) converges. The verdict separates what a tail rule
// proves from what a finite window merely suggests.
struct ClassificationVerdict {
    bool explosive = false;
    bool analytic = false;  // certified by the tail rule, not just the window
    double alpha = 1;
    // running sum of f~(n)^(-1/alpha) at n = 1, 10, 100, ... and the window end
    std::vector<std::pair<std::uint64_t, double>> partial_sums;
    std::string reason;
};

ClassificationVerdict classify_growth(const GrowthFunction& f, double alpha, std::size_t window);

// alpha/e * (c * Gamma(1+alpha))^(-1/alpha): the almost-sure limit of
// M_n / sum_{i<=n} f~(i)^(-1/alpha) in the non-explosive regime.
double power_law_limit_constant(double alpha, double c);

// Partial sums of G^{-1}(1/f(n)) for a general passage-time distribution,
// the criterion quantity when G is not a power law. Requires f nondecreasing
// on the window; inverse_cdf must accept arguments down to 0.
std::vector<std::pair<std::uint64_t, double>> general_criterion_partial_sums(
    const GrowthFunction& f, const std::function<double(double)>& inverse_cdf,
    std::size_t window);

}  // namespace fpt
