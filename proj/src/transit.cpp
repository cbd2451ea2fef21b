#include "fpt/transit.hpp"

#include <cmath>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

// log(1 - e^t) for t < 0, stable across both ends
double log1mexp(double t) {
    return t < -0.693147180559945309 ? std::log1p(-std::exp(t)) : std::log(-std::expm1(t));
}

}  // namespace

TransitDist TransitDist::exponential() { return TransitDist(Kind::Exponential, 1.0, 1.0); }

TransitDist TransitDist::power_law(double alpha, double c) {
    if (!(alpha > 0) || !(c > 0)) throw ContractError("power-law transit needs alpha > 0, c > 0");
    return TransitDist(Kind::PowerLaw, alpha, c);
}

TransitDist TransitDist::custom(double alpha, double c, std::function<double(double)> inverse_cdf) {
    if (!(alpha > 0) || !(c > 0)) throw ContractError("custom transit needs alpha > 0, c > 0");
    if (!inverse_cdf) throw ContractError("custom transit needs an inverse cdf");
    TransitDist d(Kind::Custom, alpha, c);
    d.custom_ = std::move(inverse_cdf);
    return d;
}

double TransitDist::inverse_cdf(double u) const {
    if (!(u >= 0) || u > 1) throw ContractError("inverse cdf argument must lie in [0,1]");
    switch (kind_) {
        case Kind::Exponential:
            return -std::log1p(-u);
        case Kind::PowerLaw:
            return std::pow(u / c_, 1.0 / alpha_);
        case Kind::Custom:
            return custom_(u);
    }
    return 0;
}

double TransitDist::inverse_cdf_log(double log_u) const {
    if (!(log_u <= 0)) throw ContractError("log inverse cdf argument must be <= 0");
    switch (kind_) {
        case Kind::Exponential:
            // -log1p(-u) = u + u^2/2 + ...: below ~e^-30 the first term is exact
            return log_u < -30 ? std::exp(log_u) : -std::log1p(-std::exp(log_u));
        case Kind::PowerLaw:
            return std::exp((log_u - std::log(c_)) / alpha_);
        case Kind::Custom:
            return custom_(std::exp(log_u));
    }
    return 0;
}

ChildCount ChildCount::of(std::uint64_t m) {
    if (m < 1) throw ContractError("child count must be >= 1");
    ChildCount c;
    c.count = m;
    c.log_count = std::log(static_cast<double>(m));
    c.exact = true;
    return c;
}

ChildCount ChildCount::from_log(double log_m) {
    if (!(log_m >= 0)) throw ContractError("log child count must be >= 0");
    ChildCount c;
    c.count = 0;
    c.log_count = log_m;
    c.exact = false;
    return c;
}

ChildCount child_count(const GrowthFunction& f, std::uint64_t level) {
    try {
        return ChildCount::of(f.value(level));
    } catch (const SizeError&) {
        return ChildCount::from_log(f.log_value(level));
    }
}

double sample_min_transit(const ChildCount& m, const TransitDist& dist, RngStream& rng) {
    const double v = rng.next_unit();
    if (dist.is_exponential()) {
        // min of m exponentials is Exp(m)
        const double e = -std::log1p(-v);
        return m.exact ? e / static_cast<double>(m.count) : e * std::exp(-m.log_count);
    }
    // P(min > t) = (1-G(t))^m: push one uniform through the conditional scale
    const double t = m.exact ? std::log1p(-v) / static_cast<double>(m.count)
                             : std::log1p(-v) * std::exp(-m.log_count);
    return dist.inverse_cdf_log(log1mexp(t));
}

std::vector<double> sample_k_order_stats(const ChildCount& m, unsigned k, const TransitDist& dist,
                                         RngStream& rng) {
    if (k == 0) return {};
    if (m.exact && k > m.count)
        throw ContractError("asked for " + std::to_string(k) + " order statistics from " +
                            std::to_string(m.count) + " draws");
    std::vector<double> out;
    out.reserve(k);
    // 1/(m-j+1), as a multiplier so astronomical m underflows instead of
    // overflowing (j is negligible against such m anyway)
    auto inv_remaining = [&](unsigned j) {
        return m.exact ? 1.0 / static_cast<double>(m.count - j + 1) : std::exp(-m.log_count);
    };
    if (dist.is_exponential()) {
        double x = 0;
        for (unsigned j = 1; j <= k; ++j) {
            x += -std::log1p(-rng.next_unit()) * inv_remaining(j);
            out.push_back(x);
        }
        return out;
    }
    // t tracks log(1 - U_(j)): given U_(j-1), the next gap is the minimum of
    // the remaining m-j+1 uniforms rescaled to (U_(j-1), 1)
    double t = 0;
    for (unsigned j = 1; j <= k; ++j) {
        t += std::log1p(-rng.next_unit()) * inv_remaining(j);
        out.push_back(dist.inverse_cdf_log(log1mexp(t)));
    }
    return out;
}

}  // namespace fpt
