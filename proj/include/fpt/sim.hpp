#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpt/classify.hpp"
#include "fpt/growth.hpp"
#include "fpt/regularized.hpp"
#include "fpt/rng.hpp"
#include "fpt/transit.hpp"
#include "fpt/tree.hpp"

namespace fpt {

struct SimConfig {
    std::uint64_t seed = 1;
    std::uint64_t replicas = 1;
    std::size_t depth = 100;
    std::size_t beam_width = 64;
    unsigned prune_k = 3;
    bool weighted = false;  // minimize sums of f~(n)^(1/alpha) * X instead of X
    TransitDist dist = TransitDist::exponential();
    std::size_t vertex_cap = kDefaultVertexCap;
};

// One replica's front history. level_min[n-1] estimates (or equals, in
// exact mode) the minimal passage sum to level n; the normalizer is the
// compensated running sum of f~(n)^(-1/alpha); ratios are their quotient,
// the quantity with the alpha/e * (c Gamma(1+alpha))^(-1/alpha) limit.
struct Trajectory {
    std::string mode;  // "greedy" | "beam" | "exact"
    std::uint64_t seed = 0;
    std::uint64_t replica = 0;
    bool weighted = false;
    double alpha = 1;
    std::vector<double> level_min;
    std::vector<double> normalizer;
    std::vector<double> ratio;
};

// Single descending path, at each level adding the minimum of that level's
// offspring draws. An upper bound on the true front; its total converging is
// already an explosion certificate.
Trajectory greedy_descent(const GrowthFunction& f, std::size_t depth, const TransitDist& dist,
                          std::uint64_t seed, std::uint64_t replica);

// Beam search: keep the beam_width smallest partial sums, expanding each
// front member by its prune_k smallest offspring times (order statistics,
// O(prune_k) per member however large the offspring count). Upper-estimates
// every level minimum.
Trajectory beam_front(const SimConfig& cfg, const GrowthFunction& f, std::uint64_t replica);

// Exact level minima by depth-first branch and bound with lazily sampled
// labels: subtrees whose prefix sum already exceeds the best completed
// bottom-level sum cannot improve any level. Visits are capped by
// cfg.vertex_cap. Ties have probability zero, so minima are exact almost
// surely. Draw order differs from the breadth-first samplers by design;
// comparisons against estimators belong on materialized labels below.
Trajectory exact_front(const SimConfig& cfg, const GrowthFunction& f, std::uint64_t replica);

// Fully drawn spherical tree, breadth-first level by level: the common
// sample space for estimator-versus-exact comparisons. Vertex j of level n
// has offspring[n] children, contiguous at level n+1 starting at
// j * offspring[n].
struct LabeledLevels {
    std::vector<std::uint64_t> offspring;    // f(1..depth)
    std::vector<std::vector<double>> times;  // times[n-1]: labels of level n edges
    std::size_t depth() const { return offspring.size(); }
};

LabeledLevels materialize_levels(const GrowthFunction& f, std::size_t depth,
                                 const TransitDist& dist, std::uint64_t seed,
                                 std::uint64_t replica,
                                 std::size_t vertex_cap = kDefaultVertexCap);

// Exact per-level minima on materialized labels, plain level sweep.
std::vector<double> exact_level_minima(const LabeledLevels& tree);

// Beam front restricted to materialized labels. With beam_width >= the
// widest level and prune_k >= every offspring count it reproduces
// exact_level_minima on the same labels exactly.
std::vector<double> beam_level_minima(const LabeledLevels& tree, std::size_t beam_width,
                                      unsigned prune_k);

// First-moment bound for exponential transit times:
//   P(M_n < x) <= min(1, prod f(i) * P(Gamma(n,1) < x))
// `sharp` uses the regularized incomplete gamma, `crude` the x^n/n! estimate.
struct FirstMomentBound {
    double sharp = 1;
    double crude = 1;
};
FirstMomentBound first_moment_bound(const GrowthFunction& f, std::size_t n, double x);

// (n/e) * (1 + ln(1-eps)): weighted fronts stay above this with probability
// 1 - (1-eps)^n. Requires eps in (0, 1 - 1/e) so the threshold is positive.
double weighted_chernoff_threshold(std::size_t n, double eps);

// Cross-replica ratio summary against the power-law limit constant.
struct LevelBand {
    std::size_t level = 0;
    double mean = 0, lo = 0, hi = 0;
};
struct RatioSummary {
    std::vector<LevelBand> levels;
    double limit = 0;
    double tolerance = 0;
    std::vector<std::size_t> off_band_levels;  // band entirely outside limit*(1 +- tol)
    bool normalizer_converged = false;  // explosion-regime input: ratios not meaningful
};
RatioSummary ratio_statistics(const std::vector<Trajectory>& trajectories, double alpha, double c,
                              double tolerance);

// End-to-end criterion check: analytic classification, greedy totals, and
// weighted fronts against the threshold, with a defect flag when theory and
// simulation contradict each other.
struct ExplosionBudget {
    std::size_t depth = 400;
    std::uint64_t replicas = 20;
    std::uint64_t seed = 1;
    std::size_t beam_width = 64;
    unsigned prune_k = 3;
    double eps = 0.2;
};
struct ExplosionReport {
    ClassificationVerdict classification;
    bool greedy_totals_cauchy = false;   // tail increment below 1e-3: explosion certificate
    double greedy_total_mean = 0;
    double threshold = 0;                // weighted_chernoff_threshold(depth, eps)
    double threshold_violation_rate = 0; // weighted front below threshold (theory: ~never)
    bool explosive = false;
    bool defect = false;
    std::string evidence;
};
ExplosionReport explosion_test(const GrowthFunction& f, const TransitDist& dist,
                               const ExplosionBudget& budget);

}  // namespace fpt
