#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fpt/growth.hpp"
#include "fpt/rng.hpp"

namespace fpt {

// Edge passage-time distribution on [0, infinity) with G(t) ~ c * t^alpha
// as t -> 0. The sampling layer only ever needs the inverse CDF, and for
// extreme minima it needs it in log space: G^{-1}(e^s) stays accurate when
// e^s is far below the subnormal range of the plain argument.
class TransitDist {
  public:
    static TransitDist exponential();                      // alpha = 1, c = 1
    static TransitDist power_law(double alpha, double c);  // G(t) = min(1, c t^alpha)
    static TransitDist custom(double alpha, double c, std::function<double(double)> inverse_cdf);

    double alpha() const { return alpha_; }
    double c() const { return c_; }
    bool is_exponential() const { return kind_ == Kind::Exponential; }

    double inverse_cdf(double u) const;
    double inverse_cdf_log(double log_u) const;

  private:
    enum class Kind { Exponential, PowerLaw, Custom };
    TransitDist(Kind k, double a, double c) : kind_(k), alpha_(a), c_(c) {}

    Kind kind_;
    double alpha_;
    double c_;
    std::function<double(double)> custom_;
};

// Offspring count at one level. Exact when it fits 64 bits; otherwise only
// its logarithm survives, which is all the minimum-of-m machinery needs.
struct ChildCount {
    std::uint64_t count = 1;
    double log_count = 0;
    bool exact = true;

    static ChildCount of(std::uint64_t m);
    static ChildCount from_log(double log_m);
};

ChildCount child_count(const GrowthFunction& f, std::uint64_t level);

// Minimum of m i.i.d. transit times in O(1): one uniform through the
// conditional quantile. Exponential gets the direct Exp(m) draw.
double sample_min_transit(const ChildCount& m, const TransitDist& dist, RngStream& rng);

// The k smallest of m i.i.d. transit times, ascending, in O(k) independent
// of m. Exponential uses the spacing representation (partial sums of
// independent exponentials scaled by the remaining count); anything else
// walks conditional uniform order statistics through G^{-1}. Requires
// k <= m when m is exact.
std::vector<double> sample_k_order_stats(const ChildCount& m, unsigned k, const TransitDist& dist,
                                         RngStream& rng);

}  // namespace fpt
