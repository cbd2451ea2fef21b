#include "fpt/regularized.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "fpt/errors.hpp"

namespace fpt {

double RegularizedGrowth::log_value(std::size_t n) const {
    if (n < 1 || n > window) throw ContractError("regularized index out of window");
    return log_values[n - 1];
}

double RegularizedGrowth::value(std::size_t n) const { return std::exp(log_value(n)); }

bool RegularizedGrowth::is_stable(std::size_t n) const {
    if (n < 1 || n > window) throw ContractError("regularized index out of window");
    return stable_flags[n - 1] != 0;
}

bool RegularizedGrowth::all_stable() const {
    for (const char s : stable_flags)
        if (!s) return false;
    return true;
}

namespace {

constexpr long double kTieEps = 1e-12L;

// cumulative log products L_0 = 0, L_n = sum_{i<=n} ln f(i)
std::vector<long double> cumulative_log(const GrowthFunction& f, std::size_t horizon) {
    std::vector<long double> L(horizon + 1, 0.0L);
    for (std::size_t n = 1; n <= horizon; ++n)
        L[n] = L[n - 1] + static_cast<long double>(f.log_value(n));
    return L;
}

// Greatest convex minorant increments of the points (i, L_i), i = 0..M,
// anchored at (0,0). `ray` caps slopes from the point where the finite hull
// would exceed it: that is the exact infinite hull when increments beyond
// the table are exactly `ray`.
std::vector<long double> minorant_increments(const std::vector<long double>& L,
                                             std::optional<long double> ray,
                                             std::size_t want) {
    const std::size_t M = L.size() - 1;
    std::vector<std::size_t> hx{0};  // hull vertex x-coords
    auto slope = [&](std::size_t a, std::size_t b) {
        return (L[b] - L[a]) / static_cast<long double>(b - a);
    };
    for (std::size_t i = 1; i <= M; ++i) {
        while (hx.size() >= 2) {
            const std::size_t a = hx[hx.size() - 2], b = hx.back();
            const long double s_ab = slope(a, b), s_ai = slope(a, i);
            // pop while the middle vertex sits on or above the chord
            if (s_ai <= s_ab + kTieEps * std::max<long double>(1.0L, std::fabs(s_ab))) hx.pop_back();
            else break;
        }
        hx.push_back(i);
    }
    std::vector<long double> inc;
    inc.reserve(want);
    for (std::size_t seg = 0; seg + 1 < hx.size() && inc.size() < want; ++seg) {
        long double s = slope(hx[seg], hx[seg + 1]);
        if (ray && s > *ray) s = *ray;  // slopes only grow from here; everything clamps
        for (std::size_t i = hx[seg]; i < hx[seg + 1] && inc.size() < want; ++i) inc.push_back(s);
    }
    while (inc.size() < want) inc.push_back(ray ? *ray : inc.back());
    return inc;
}

struct Horizons {
    std::size_t main;   // f read up to here for the values
    std::size_t confirm;  // and up to here for the stability check
    bool final_values;    // constant-slope tail or exhausted table: nothing can move
    std::optional<long double> ray;
};

Horizons plan_horizons(const GrowthFunction& f, std::size_t window, std::size_t slack) {
    if (window < 1) throw ContractError("regularization window must be >= 1");
    Horizons h;
    if (const auto s = f.constant_tail_log_slope()) {
        // points beyond the prefix all lie on the slope-s ray: keep the prefix
        // (plus the window itself, for indices past it) and clamp
        h.final_values = true;
        h.ray = static_cast<long double>(*s);
        h.main = std::max<std::size_t>(window, f.prefix().size());
        h.confirm = h.main;
        return h;
    }
    h.final_values = false;
    h.main = window + slack;
    h.confirm = window + 2 * slack;
    if (const auto cap = f.max_index()) {
        if (h.main > *cap)
            throw TableHorizonError("regularization needs f up to index " +
                                    std::to_string(h.main) + " but the table ends at " +
                                    std::to_string(*cap));
        h.confirm = std::min<std::size_t>(h.confirm, *cap);
        h.final_values = h.main == *cap;  // the whole of f entered the hull
    }
    return h;
}

}  // namespace

std::vector<double> hull_log_increments(const std::vector<double>& log_f) {
    std::vector<long double> L(log_f.size() + 1, 0.0L);
    for (std::size_t i = 0; i < log_f.size(); ++i) L[i + 1] = L[i] + log_f[i];
    const auto inc = minorant_increments(L, std::nullopt, log_f.size());
    return std::vector<double>(inc.begin(), inc.end());
}

RegularizedGrowth regularize_hull(const GrowthFunction& f, std::size_t window, std::size_t slack) {
    const Horizons hz = plan_horizons(f, window, slack);
    const auto L_main = cumulative_log(f, hz.main);
    const auto inc = minorant_increments(L_main, hz.ray, window);

    RegularizedGrowth out;
    out.window = window;
    out.analyzed_horizon = hz.main;
    out.log_values.assign(inc.begin(), inc.end());
    out.minorant_cumulative.resize(window + 1, 0.0);
    long double cum = 0;
    for (std::size_t n = 0; n < window; ++n) {
        cum += inc[n];
        out.minorant_cumulative[n + 1] = static_cast<double>(cum);
    }
    if (hz.final_values) {
        out.stable_flags.assign(window, 1);
        return out;
    }
    if (hz.confirm == hz.main) {  // zero slack: nothing certifies anything
        out.stable_flags.assign(window, 0);
        return out;
    }
    const auto L_conf = cumulative_log(f, hz.confirm);
    const auto inc_conf = minorant_increments(L_conf, hz.ray, window);
    out.stable_flags.resize(window);
    for (std::size_t n = 0; n < window; ++n) {
        const long double scale = std::max<long double>(1.0L, std::fabs(inc[n]));
        out.stable_flags[n] = std::fabs(inc[n] - inc_conf[n]) <= 1e-12L * scale ? 1 : 0;
    }
    return out;
}

namespace {

std::vector<long double> recursive_increments(const std::vector<long double>& L,
                                              std::optional<long double> ray,
                                              std::size_t want) {
    const std::size_t M = L.size() - 1;
    std::vector<long double> inc;
    inc.reserve(want);
    long double C = 0;  // cumulative log of the regularized values so far
    for (std::size_t n = 1; n <= want; ++n) {
        long double best = std::numeric_limits<long double>::infinity();
        for (std::size_t m = n; m <= M; ++m)
            best = std::min(best, (L[m] - C) / static_cast<long double>(m - n + 1));
        if (ray) best = std::min(best, *ray);  // chord limit toward the constant tail
        inc.push_back(best);
        C += best;
    }
    return inc;
}

}  // namespace

RegularizedGrowth regularize_recursive(const GrowthFunction& f, std::size_t window,
                                       std::size_t slack) {
    const Horizons hz = plan_horizons(f, window, slack);
    const auto L_main = cumulative_log(f, hz.main);
    const auto inc = recursive_increments(L_main, hz.ray, window);

    RegularizedGrowth out;
    out.window = window;
    out.analyzed_horizon = hz.main;
    out.log_values.assign(inc.begin(), inc.end());
    out.minorant_cumulative.resize(window + 1, 0.0);
    long double cum = 0;
    for (std::size_t n = 0; n < window; ++n) {
        cum += inc[n];
        out.minorant_cumulative[n + 1] = static_cast<double>(cum);
    }
    if (hz.final_values) {
        out.stable_flags.assign(window, 1);
        return out;
    }
    if (hz.confirm == hz.main) {
        out.stable_flags.assign(window, 0);
        return out;
    }
    const auto L_conf = cumulative_log(f, hz.confirm);
    const auto inc_conf = recursive_increments(L_conf, hz.ray, window);
    out.stable_flags.resize(window);
    for (std::size_t n = 0; n < window; ++n) {
        const long double scale = std::max<long double>(1.0L, std::fabs(inc[n]));
        out.stable_flags[n] = std::fabs(inc[n] - inc_conf[n]) <= 1e-12L * scale ? 1 : 0;
    }
    return out;
}

RegularizedGrowth regularize_default(const GrowthFunction& f, std::size_t window) {
    std::size_t slack = window;
    if (const auto cap = f.max_index()) {
        if (window > *cap)
            throw TableHorizonError("window " + std::to_string(window) +
                                    " exceeds the growth table length " + std::to_string(*cap));
        slack = *cap - window;
    }
    return regularize_hull(f, window, slack);
}

std::vector<std::size_t> equal_product_indices(const GrowthFunction& f, std::size_t window,
                                               std::size_t slack) {
    const RegularizedGrowth reg = regularize_hull(f, window, slack);
    if (!reg.all_stable())
        throw ContractError(
            "equal-product indices need every window index stable; widen the slack");
    std::vector<std::size_t> out;
    long double L = 0;
    for (std::size_t n = 1; n <= window; ++n) {
        L += static_cast<long double>(f.log_value(n));
        const long double m = reg.minorant_cumulative[n];
        if (std::fabs(L - m) <= 1e-9L * std::max<long double>(1.0L, std::fabs(L)))
            out.push_back(n);
    }
    return out;
}

}  // namespace fpt
