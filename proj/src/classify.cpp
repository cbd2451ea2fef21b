#include "fpt/classify.hpp"

#include <cmath>

#include "fpt/errors.hpp"
#include "fpt/kahan.hpp"

namespace fpt {

namespace {

bool is_checkpoint(std::uint64_t n) {
    while (n % 10 == 0) n /= 10;
    return n == 1;
}

}  // namespace

ClassificationVerdict classify_growth(const GrowthFunction& f, double alpha, std::size_t window) {
    if (!(alpha > 0)) throw ContractError("alpha must be > 0");
    if (window < 1) throw ContractError("classification window must be >= 1");

    ClassificationVerdict v;
    v.alpha = alpha;

    std::size_t slack = window;
    if (const auto cap = f.max_index()) {
        if (window > *cap)
            throw TableHorizonError("classification window " + std::to_string(window) +
                                    " exceeds the growth table length " + std::to_string(*cap));
        slack = *cap - window;
    }
    const RegularizedGrowth reg = regularize_hull(f, window, slack);

    KahanSum sum;
    double half_sum = 0;
    for (std::size_t n = 1; n <= window; ++n) {
        sum.add(std::exp(-reg.log_value(n) / alpha));
        if (n == std::max<std::size_t>(1, window / 2)) half_sum = sum.value();
        if (is_checkpoint(n) || n == window) v.partial_sums.push_back({n, sum.value()});
    }

    using K = GrowthTail::Kind;
    switch (f.tail().kind) {
        case K::Constant:
            v.analytic = true;
            v.explosive = false;
            v.reason = "constant tail: terms of the criterion sum stay bounded away from zero";
            break;
        case K::Polynomial: {
            const double d = f.tail().poly_degree;
            v.analytic = true;
            if (d == 0) {
                v.explosive = false;
                v.reason = "degree-0 polynomial tail behaves like a constant; the sum diverges";
            } else if (d / alpha > 1) {
                v.explosive = true;
                v.reason = "polynomial tail with degree/alpha > 1: criterion sum converges";
            } else {
                v.explosive = false;
                v.reason = "polynomial tail with degree/alpha <= 1: criterion sum diverges";
            }
            break;
        }
        case K::Exponential:
            v.analytic = true;
            if (f.tail().exp_base > 1) {
                v.explosive = true;
                v.reason = "exponential tail: criterion terms decay geometrically";
            } else {
                v.explosive = false;
                v.reason = "exponential tail with base <= 1 degenerates to constant growth";
            }
            break;
        case K::Alternating:
            // base > 1 is a construction invariant; the regularized values are
            // paired geometric means, so terms decay like base^(-n/(2 alpha))
            v.analytic = true;
            v.explosive = true;
            v.reason = "alternating tail: regularized growth is geometric, criterion sum converges";
            break;
        case K::None: {
            v.analytic = false;
            const double late = sum.value() - half_sum;
            v.explosive = late < 1e-3;
            v.reason = v.explosive
                           ? "table evidence only: the criterion sum moved < 1e-3 over the "
                             "second half of the window"
                           : "table evidence only: the criterion sum is still growing at the "
                             "window end";
            break;
        }
    }
    return v;
}

double power_law_limit_constant(double alpha, double c) {
    if (!(alpha > 0) || !(c > 0)) throw ContractError("limit constant needs alpha > 0, c > 0");
    return alpha / std::exp(1.0) * std::pow(c * std::tgamma(1.0 + alpha), -1.0 / alpha);
}

std::vector<std::pair<std::uint64_t, double>> general_criterion_partial_sums(
    const GrowthFunction& f, const std::function<double(double)>& inverse_cdf,
    std::size_t window) {
    if (!inverse_cdf) throw ContractError("inverse cdf is required");
    if (window < 1) throw ContractError("criterion window must be >= 1");
    double prev = -1;
    for (std::size_t n = 1; n <= window; ++n) {
        const double cur = f.log_value(n);
        if (cur < prev - 1e-12)
            throw ContractError("general criterion needs nondecreasing growth; decrease at index " +
                                std::to_string(n));
        prev = cur;
    }
    std::vector<std::pair<std::uint64_t, double>> out;
    KahanSum sum;
    for (std::size_t n = 1; n <= window; ++n) {
        const double u = std::exp(-f.log_value(n));  // 1/f(n), underflow to 0 is fine
        sum.add(inverse_cdf(u));
        if (is_checkpoint(n) || n == window) out.push_back({n, sum.value()});
    }
    return out;
}

}  // namespace fpt
