#include "fpt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fpt/box_union.hpp"
#include "fpt/classify.hpp"
#include "fpt/domination.hpp"
#include "fpt/errors.hpp"
#include "fpt/graded_graph.hpp"
#include "fpt/growth.hpp"
#include "fpt/json_io.hpp"
#include "fpt/manifest.hpp"
#include "fpt/path_prob.hpp"
#include "fpt/random_instances.hpp"
#include "fpt/rational.hpp"
#include "fpt/regularized.hpp"
#include "fpt/sim.hpp"
#include "fpt/tree.hpp"

namespace fpt {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- helpers

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string fmt_g(double v, int precision = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(what + ": expected comma-separated nonnegative integers, got \"" +
                             text + '"');
        try {
            out.push_back(std::stoull(item));
        } catch (const std::out_of_range&) {
            throw ParseError(what + ": integer out of range: " + item);
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ParseError(what + ": empty list");
    return out;
}

// "[a,b]" segments joined by 'x', each optionally repeated via "^k":
// box:[0,1/2]x[0,1]  box:[0,1/2]^2  box:[0,1/3]^2x[1/2,1]
BoxUnion parse_box_token(const std::string& body) {
    const auto bad = [&](const std::string& why) {
        return ParseError("box token: " + why + " in \"" + body + '"');
    };
    Box b;
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] != '[') throw bad("expected '['");
        const std::size_t comma = body.find(',', i);
        const std::size_t close = body.find(']', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw bad("expected \"[lo,hi]\"");
        const Rational lo = parse_rational(body.substr(i + 1, comma - i - 1));
        const Rational hi = parse_rational(body.substr(comma + 1, close - comma - 1));
        std::size_t reps = 1;
        i = close + 1;
        if (i < body.size() && body[i] == '^') {
            std::size_t j = i + 1, val = 0;
            if (j >= body.size() || !std::isdigit(static_cast<unsigned char>(body[j])))
                throw bad("expected digits after '^'");
            while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
                val = val * 10 + static_cast<std::size_t>(body[j++] - '0');
            if (val == 0 || val > 64) throw bad("power must be in [1,64]");
            reps = val;
            i = j;
        }
        for (std::size_t r = 0; r < reps; ++r) {
            b.lo.push_back(lo);
            b.hi.push_back(hi);
        }
        if (i < body.size()) {
            if (body[i] != 'x') throw bad("expected 'x' between intervals");
            ++i;
            if (i == body.size()) throw bad("trailing 'x'");
        }
    }
    if (b.lo.empty()) throw bad("no intervals");
    try {
        return BoxUnion(b.lo.size(), {b});
    } catch (const ContractError& e) {
        throw ParseError(std::string("box token: ") + e.what());
    }
}

constexpr const char* kTreeForms =
    "figure1-gamma | figure1-gamma-prime | paths:n,k | spherical:f1,f2,... | "
    "height2:p1,p2,... | file:PATH | *.json";

RootedTree parse_tree_token(const std::string& tok) {
    if (tok == "figure1-gamma") return gluing_example_trees().first;
    if (tok == "figure1-gamma-prime") return gluing_example_trees().second;
    if (starts_with(tok, "paths:")) {
        const auto nk = parse_u64_list(tok.substr(6), "paths");
        if (nk.size() != 2 || nk[0] < 1 || nk[1] < 1)
            throw ParseError("paths token needs two positive integers: paths:n,k");
        return build_paths_tree(nk[0], nk[1]);
    }
    if (starts_with(tok, "spherical:")) {
        const auto f = parse_u64_list(tok.substr(10), "spherical");
        try {
            return build_spherical(GrowthFunction(f), f.size());
        } catch (const ContractError& e) {
            throw ParseError(std::string("spherical token: ") + e.what());
        }
    }
    if (starts_with(tok, "height2:")) {
        auto p = parse_u64_list(tok.substr(8), "height2");
        std::sort(p.begin(), p.end(), std::greater<>());
        try {
            return build_height2_tree(p);
        } catch (const ContractError& e) {
            throw ParseError(std::string("height2 token: ") + e.what());
        }
    }
    if (starts_with(tok, "file:")) return tree_from_json(read_text_file(tok.substr(5)));
    if (ends_with(tok, ".json")) return tree_from_json(read_text_file(tok));
    throw ParseError("unknown tree token \"" + tok + "\"; expected " + kTreeForms);
}

constexpr const char* kSetForms =
    "counterexample | box:[lo,hi]x[lo,hi]... (with optional ^k powers) | "
    "witness:r,eps | empty:dim | file:PATH | *.json";

BoxUnion parse_set_token(const std::string& tok) {
    if (tok == "counterexample") return gluing_counterexample_set();
    if (starts_with(tok, "box:")) return parse_box_token(tok.substr(4));
    if (starts_with(tok, "witness:")) {
        const std::string body = tok.substr(8);
        const std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw ParseError("witness token needs witness:r,eps (eps rational in (0,1))");
        std::uint64_t r = 0;
        try {
            r = std::stoull(body.substr(0, comma));
        } catch (const std::exception&) {
            throw ParseError("witness token: bad exponent \"" + body.substr(0, comma) + '"');
        }
        try {
            return height2_witness_set(r, parse_rational(body.substr(comma + 1)));
        } catch (const ContractError& e) {
            throw ParseError(std::string("witness token: ") + e.what());
        }
    }
    if (starts_with(tok, "empty:")) {
        const auto d = parse_u64_list(tok.substr(6), "empty");
        if (d.size() != 1 || d[0] < 1) throw ParseError("empty token needs one dimension: empty:n");
        return BoxUnion(d[0]);
    }
    if (starts_with(tok, "file:")) return box_union_from_json(read_text_file(tok.substr(5)));
    if (ends_with(tok, ".json")) return box_union_from_json(read_text_file(tok));
    throw ParseError("unknown set token \"" + tok + "\"; expected " + kSetForms);
}

GrowthFunction parse_growth_token(const std::string& tok) {
    try {
        if (starts_with(tok, "file:")) return growth_from_json(read_text_file(tok.substr(5)));
        if (ends_with(tok, ".json")) return growth_from_json(read_text_file(tok));
        return GrowthFunction::parse(tok);
    } catch (const ContractError& e) {
        throw ParseError(std::string("growth token: ") + e.what());
    }
}

// f(n) column that stays printable when the exact value overflows 64 bits
std::string growth_value_str(const GrowthFunction& f, std::uint64_t n) {
    try {
        return std::to_string(f.value(n));
    } catch (const SizeError&) {
        return "e^" + fmt_g(f.log_value(n), 6);
    }
}

// offspring counts per level when every vertex of a level agrees, else empty
std::vector<std::uint64_t> spherical_profile(const RootedTree& t) {
    std::vector<std::uint64_t> prof;
    std::vector<std::uint32_t> level{0};
    while (!level.empty()) {
        const std::size_t want = t.children(level.front()).size();
        std::vector<std::uint32_t> next;
        for (const std::uint32_t v : level) {
            if (t.children(v).size() != want) return {};
            for (const std::uint32_t c : t.children(v)) next.push_back(c);
        }
        if (want == 0) break;
        prof.push_back(want);
        level = std::move(next);
    }
    return prof;
}

void emit_outputs(const std::string& out_dir, const std::string& command, const json& config,
                  const std::vector<std::pair<std::string, std::string>>& files,
                  std::ostream& out) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const auto& [name, content] : files) {
        const std::string path = (std::filesystem::path(out_dir) / name).string();
        write_text_file(path, content);
        paths.push_back(path);
    }
    const std::string manifest_path = (std::filesystem::path(out_dir) / "manifest.json").string();
    write_manifest(manifest_path, command, config.dump(), paths);
    out << "wrote";
    for (const auto& p : paths) out << ' ' << p;
    out << ' ' << manifest_path << "\n";
}

// ---------------------------------------------------------------- eval

struct EvalOpts {
    std::string tree, set, format = "text", out_dir;
    bool some = false;
};

int cmd_eval(const EvalOpts& o, std::ostream& out) {
    const RootedTree t = parse_tree_token(o.tree);
    const BoxUnion B = parse_set_token(o.set);
    const ExactProb p = o.some ? tree_some_path_prob(t, B) : tree_all_paths_prob(t, B);
    const json report{{"tree", o.tree},
                      {"set", o.set},
                      {"mode", o.some ? "some-path" : "all-paths"},
                      {"fraction", to_fraction_string(p)},
                      {"decimal", to_decimal_string(p)}};
    if (o.format == "json")
        out << report.dump(2) << "\n";
    else
        out << to_fraction_string(p) << "\n" << to_decimal_string(p) << "\n";
    if (!o.out_dir.empty()) {
        const json config{{"tree", o.tree}, {"set", o.set}, {"some_path", o.some}};
        emit_outputs(o.out_dir, "eval", config, {{"report.json", report.dump(2) + "\n"}}, out);
    }
    return 0;
}

// ---------------------------------------------------------------- dominates

struct DominatesOpts {
    std::string first, second, format = "text", out_dir;
    bool spherical = false, height2 = false, tree = false;
    std::uint64_t horizon = 100;
};

int cmd_dominates(const DominatesOpts& o, std::ostream& out) {
    if (o.spherical + o.height2 + o.tree > 1)
        throw ParseError("choose at most one of --spherical / --height2 / --tree");

    int code = 2;
    std::string verdict, criterion, detail;
    json extra = json::object();

    if (o.spherical) {
        const GrowthFunction f = parse_growth_token(o.first);
        const GrowthFunction g = parse_growth_token(o.second);
        const auto rep = dominates_spherical(f, g, o.horizon);
        criterion = "cumulative offspring products over levels 1.." + std::to_string(o.horizon);
        if (rep.dominates) {
            code = 0;
            verdict = "dominates";
        } else {
            code = 1;
            verdict = "does not dominate";
            detail = "cumulative product falls behind at level " +
                     std::to_string(*rep.first_failing_level);
            extra["first_failing_level"] = *rep.first_failing_level;
        }
    } else if (o.height2) {
        auto p = parse_u64_list(o.first, "first partition");
        auto q = parse_u64_list(o.second, "second partition");
        std::sort(p.begin(), p.end(), std::greater<>());
        std::sort(q.begin(), q.end(), std::greater<>());
        const auto rep = dominates_height2(p, q);
        criterion = "height-2 tail-sum condition";
        if (rep.dominates) {
            code = 0;
            verdict = "dominates";
        } else {
            code = 1;
            verdict = "does not dominate";
            detail = "tail sums fail at index " + std::to_string(*rep.violated_tail_index) +
                     "; set witness:" + std::to_string(*rep.witness_exponent) +
                     ",eps reverses the all-paths ordering for small eps";
            extra["violated_tail_index"] = *rep.violated_tail_index;
            extra["witness_exponent"] = *rep.witness_exponent;
        }
    } else {
        const RootedTree A = parse_tree_token(o.first);
        const RootedTree B = parse_tree_token(o.second);
        const auto fa = spherical_profile(A);
        const auto fb = spherical_profile(B);
        if (!fa.empty() && !fb.empty() && A.height() == B.height()) {
            const auto rep =
                dominates_spherical(GrowthFunction(fa), GrowthFunction(fb), A.height());
            criterion = "spherically symmetric pair: cumulative offspring products";
            if (rep.dominates) {
                code = 0;
                verdict = "dominates";
            } else {
                code = 1;
                verdict = "does not dominate";
                detail = "cumulative product falls behind at level " +
                         std::to_string(*rep.first_failing_level);
            }
        } else if (A.height() == 2 && B.height() == 2) {
            const auto rep = dominates_height2(children_partition(A), children_partition(B));
            criterion = "height-2 tail-sum condition";
            if (rep.dominates) {
                code = 0;
                verdict = "dominates";
            } else {
                code = 1;
                verdict = "does not dominate";
                detail = "tail sums fail at index " + std::to_string(*rep.violated_tail_index);
            }
        } else {
            code = 2;
            verdict = "undecidable by implemented criteria";
            criterion =
                "no complete criterion at height >= 3 off the spherically symmetric case";
            if (A.height() == 3 && B.height() == 3 && A.uniform_depth() && B.uniform_depth()) {
                const BoxUnion D = gluing_counterexample_set();
                const ExactProb pa = tree_all_paths_prob(A, D);
                const ExactProb pb = tree_all_paths_prob(B, D);
                detail = "all-paths probabilities on the two-box separating set: " +
                         to_fraction_string(pa) + " vs " + to_fraction_string(pb);
                extra["all_paths_first"] = to_fraction_string(pa);
                extra["all_paths_second"] = to_fraction_string(pb);
                const auto ga = A.generation_sizes();
                const auto gb = B.generation_sizes();
                bool counts_ge = true;
                for (std::size_t i = 0; i < ga.size(); ++i) counts_ge &= ga[i] >= gb[i];
                if (counts_ge && Rational(pa) > Rational(pb)) {
                    verdict += "; counterexample set reverses intuition";
                    detail +=
                        "; the generation-count-larger tree keeps ALL paths inside the set "
                        "more often, so on the complement the smaller tree wins the some-path "
                        "comparison";
                }
            }
        }
    }

    if (o.format == "json") {
        json report{{"verdict", verdict}, {"criterion", criterion}, {"exit_code", code}};
        if (!detail.empty()) report["detail"] = detail;
        for (auto& [k, v] : extra.items()) report[k] = v;
        out << report.dump(2) << "\n";
    } else {
        out << verdict << "\n" << "criterion: " << criterion << "\n";
        if (!detail.empty()) out << detail << "\n";
    }
    return code;
}

// ---------------------------------------------------------------- tilde

struct TildeOpts {
    std::string growth, route = "hull", format = "text", out_dir;
    std::uint64_t window = 20;
    std::optional<std::uint64_t> slack;
};

int cmd_tilde(const TildeOpts& o, std::ostream& out) {
    const GrowthFunction f = parse_growth_token(o.growth);
    RegularizedGrowth r = [&] {
        if (!o.slack) {
            if (o.route == "recursive") {
                const std::uint64_t def =
                    f.table_only() ? *f.max_index() - std::min<std::uint64_t>(o.window,
                                                                              *f.max_index())
                                   : o.window;
                return regularize_recursive(f, o.window, def);
            }
            return regularize_default(f, o.window);
        }
        return o.route == "recursive" ? regularize_recursive(f, o.window, *o.slack)
                                      : regularize_hull(f, o.window, *o.slack);
    }();

    json values = json::array(), logs = json::array(), stable = json::array();
    for (std::size_t n = 1; n <= r.window; ++n) {
        values.push_back(r.value(n));
        logs.push_back(r.log_value(n));
        stable.push_back(r.is_stable(n));
    }
    const json report{{"growth", f.describe()},   {"route", o.route},
                      {"window", r.window},       {"analyzed_horizon", r.analyzed_horizon},
                      {"values", values},         {"log_values", logs},
                      {"stable", stable},         {"all_stable", r.all_stable()}};

    if (o.format == "json") {
        out << report.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "n,f,tilde,stable\n";
        for (std::size_t n = 1; n <= r.window; ++n)
            out << n << ',' << growth_value_str(f, n) << ',' << fmt_g(r.value(n), 12) << ','
                << (r.is_stable(n) ? 1 : 0) << "\n";
    } else {
        out << "regularization of " << f.describe() << " over window 1.." << r.window
            << " (read to " << r.analyzed_horizon << ")\n";
        out << "n\tf\ttilde\tstable\n";
        for (std::size_t n = 1; n <= r.window; ++n)
            out << n << '\t' << growth_value_str(f, n) << '\t' << fmt_g(r.value(n), 12) << '\t'
                << (r.is_stable(n) ? "yes" : "no") << "\n";
    }
    if (!o.out_dir.empty()) {
        const json config{{"growth", o.growth},
                          {"route", o.route},
                          {"window", o.window},
                          {"slack", o.slack ? json(*o.slack) : json()}};
        emit_outputs(o.out_dir, "tilde", config, {{"report.json", report.dump(2) + "\n"}}, out);
    }
    return 0;
}

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    std::string growth, format = "text", out_dir;
    double alpha = 1, c = 1;
    std::uint64_t window = 1000;
};

int cmd_classify(const ClassifyOpts& o, std::ostream& out) {
    const GrowthFunction f = parse_growth_token(o.growth);
    const ClassificationVerdict v = classify_growth(f, o.alpha, o.window);
    const double limit = power_law_limit_constant(o.alpha, o.c);

    json sums = json::array();
    for (const auto& [n, s] : v.partial_sums) sums.push_back(json::array({n, s}));
    const json report{{"growth", f.describe()},
                      {"alpha", o.alpha},
                      {"c", o.c},
                      {"window", o.window},
                      {"verdict", v.explosive ? "explosion" : "no-explosion"},
                      {"analytic", v.analytic},
                      {"reason", v.reason},
                      {"partial_sums", sums},
                      {"limit_constant", limit}};

    if (o.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        out << (v.explosive ? "explosion" : "no-explosion") << "\n";
        out << (v.analytic ? "analytic verdict" : "window evidence only") << ": " << v.reason
            << "\n";
        for (const auto& [n, s] : v.partial_sums)
            out << "sum of tilde-f(n)^(-1/alpha) up to n=" << n << ": " << fmt_g(s, 12) << "\n";
        if (!v.explosive)
            out << "front-speed limit constant alpha/e * (c*Gamma(1+alpha))^(-1/alpha) = "
                << fmt_g(limit, 12) << "\n";
    }
    if (!o.out_dir.empty()) {
        const json config{
            {"growth", o.growth}, {"alpha", o.alpha}, {"c", o.c}, {"window", o.window}};
        emit_outputs(o.out_dir, "classify", config, {{"report.json", report.dump(2) + "\n"}},
                     out);
    }
    return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
    std::string growth, mode = "beam", dist = "auto", out_dir = "sim-out";
    std::uint64_t seed = 1, replicas = 1;
    std::uint64_t depth = 100;
    std::uint64_t beam = 64;
    unsigned prune_k = 3;
    double alpha = 1, c = 1, tol = 0.25;
    bool weighted = false;
};

TransitDist make_dist(const std::string& kind, double alpha, double c) {
    if (kind == "exponential") {
        if (alpha != 1 || c != 1)
            throw ParseError("the exponential transit law has alpha = 1, c = 1; use --dist power "
                             "for other exponents");
        return TransitDist::exponential();
    }
    if (kind == "power") return TransitDist::power_law(alpha, c);
    return (alpha == 1 && c == 1) ? TransitDist::exponential()
                                  : TransitDist::power_law(alpha, c);
}

int cmd_simulate(const SimulateOpts& o, std::ostream& out) {
    if (o.replicas < 1) throw ParseError("--replicas must be >= 1");
    const GrowthFunction f = parse_growth_token(o.growth);
    const TransitDist dist = make_dist(o.dist, o.alpha, o.c);
    if (o.weighted && o.mode != "beam")
        throw ParseError("--weighted applies to the beam mode only");

    SimConfig cfg;
    cfg.seed = o.seed;
    cfg.replicas = o.replicas;
    cfg.depth = o.depth;
    cfg.beam_width = o.beam;
    cfg.prune_k = o.prune_k;
    cfg.weighted = o.weighted;
    cfg.dist = dist;

    std::vector<Trajectory> trajs;
    for (std::uint64_t r = 0; r < o.replicas; ++r) {
        if (o.mode == "greedy")
            trajs.push_back(greedy_descent(f, o.depth, dist, o.seed, r));
        else if (o.mode == "exact")
            trajs.push_back(exact_front(cfg, f, r));
        else
            trajs.push_back(beam_front(cfg, f, r));
    }
    const RatioSummary s = ratio_statistics(trajs, o.alpha, o.c, o.tol);
    const LevelBand& last = s.levels.back();
    const bool contains = last.lo <= s.limit && s.limit <= last.hi;

    std::string csv = "level,m_hat,normalizer,ratio,mode,seed,replica\n";
    for (const Trajectory& t : trajs)
        for (std::size_t l = 0; l < t.level_min.size(); ++l)
            csv += std::to_string(l + 1) + ',' + fmt_g(t.level_min[l]) + ',' +
                   fmt_g(t.normalizer[l]) + ',' + fmt_g(t.ratio[l]) + ',' + t.mode + ',' +
                   std::to_string(t.seed) + ',' + std::to_string(t.replica) + "\n";

    json final_ratios = json::array();
    for (const Trajectory& t : trajs) final_ratios.push_back(t.ratio.back());
    const json config{{"growth", o.growth}, {"mode", o.mode},     {"dist", o.dist},
                      {"seed", o.seed},     {"replicas", o.replicas}, {"depth", o.depth},
                      {"beam", o.beam},     {"prune_k", o.prune_k},   {"alpha", o.alpha},
                      {"c", o.c},           {"weighted", o.weighted}, {"tol", o.tol}};
    const json summary{{"config", config},
                       {"limit_constant", s.limit},
                       {"tolerance", s.tolerance},
                       {"final_level",
                        {{"level", last.level}, {"lo", last.lo}, {"mean", last.mean},
                         {"hi", last.hi}}},
                       {"band_contains_limit", contains},
                       {"off_band_levels", s.off_band_levels.size()},
                       {"normalizer_converged", s.normalizer_converged},
                       {"final_ratios", final_ratios}};

    out << "limit constant " << fmt_g(s.limit, 12) << "\n";
    out << "final-level ratio band [" << fmt_g(last.lo, 12) << ", " << fmt_g(last.hi, 12)
        << "], mean " << fmt_g(last.mean, 12) << "\n";
    out << (contains ? "band contains the limit constant\n"
                     : "band does not contain the limit constant\n");
    if (s.normalizer_converged)
        out << "note: the normalizer series converged; ratios do not equilibrate in the "
               "explosive regime\n";
    emit_outputs(o.out_dir, "simulate", config,
                 {{"trajectory.csv", csv}, {"summary.json", summary.dump(2) + "\n"}}, out);
    return 0;
}

// ---------------------------------------------------------------- scan-conjecture

struct ScanOpts {
    std::uint64_t count = 500, seed = 1;
    std::uint64_t max_levels = 3, max_vertices = 8, max_denominator = 6;
    std::string out_dir;
};

int cmd_scan(const ScanOpts& o, std::ostream& out) {
    if (o.count < 1) throw ParseError("--count must be >= 1");
    RngStream rng(o.seed, 0);
    json violations = json::array();
    for (std::uint64_t i = 0; i < o.count; ++i) {
        const GradedGraph g = random_graded_graph(rng, o.max_levels, o.max_vertices);
        const BoxUnion D = random_box_union(rng, g.num_levels(), 1, 3, o.max_denominator);
        const CountBoundCheck chk = check_count_bound(g, D);
        if (chk.holds) continue;
        json edges = json::array();
        for (const auto& lvl : g.edges) {
            json e = json::array();
            for (const auto& [u, v] : lvl) e.push_back(json::array({u, v}));
            edges.push_back(std::move(e));
        }
        json boxes = json::array();
        for (const Box& b : D.boxes()) {
            json lo = json::array(), hi = json::array();
            for (const auto& r : b.lo) lo.push_back(to_fraction_string(r));
            for (const auto& r : b.hi) hi.push_back(to_fraction_string(r));
            boxes.push_back(json{{"lo", std::move(lo)}, {"hi", std::move(hi)}});
        }
        violations.push_back(json{{"instance", i},
                                  {"graph",
                                   {{"level_sizes", g.level_sizes}, {"edges", std::move(edges)}}},
                                  {"set", {{"dim", D.dim()}, {"boxes", std::move(boxes)}}},
                                  {"full_paths", chk.full_paths},
                                  {"lhs", to_fraction_string(chk.lhs)},
                                  {"rhs", to_fraction_string(chk.rhs)}});
    }

    const json config{{"count", o.count},
                      {"seed", o.seed},
                      {"max_levels", o.max_levels},
                      {"max_vertices", o.max_vertices},
                      {"max_denominator", o.max_denominator}};
    const json report{{"config", config},
                      {"checked", o.count},
                      {"violations", violations}};
    if (violations.empty()) {
        out << "checked " << o.count << " instances: the path-count inequality held in every "
            << "exact evaluation\n";
    } else {
        out << violations.size() << " violation(s) in " << o.count
            << " instances; reproducible instances follow\n";
        out << violations.dump(2) << "\n";
    }
    if (!o.out_dir.empty())
        emit_outputs(o.out_dir, "scan-conjecture", config,
                     {{"scan.json", report.dump(2) + "\n"}}, out);
    return violations.empty() ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------- driver

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact path probabilities, tree domination checks, and first-passage "
                 "percolation simulation on spherically symmetric trees"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    int code = 0;

    EvalOpts ev;
    auto* eval = app.add_subcommand(
        "eval", "exact probability that all (or some) root-to-bottom paths land in a set");
    eval->add_option("--tree", ev.tree, kTreeForms)->required();
    eval->add_option("--set", ev.set, kSetForms)->required();
    eval->add_flag("--some-path", ev.some, "P(at least one path in the set) instead of all paths");
    eval->add_option("--format", ev.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--out", ev.out_dir, "directory for report.json + manifest.json");
    eval->callback([&] { code = cmd_eval(ev, out); });

    DominatesOpts dm;
    auto* dom = app.add_subcommand(
        "dominates", "decide the stochastic-domination order (exit 0 yes / 1 no / 2 undecided)");
    dom->add_option("first", dm.first, "growth, partition, or tree token")->required();
    dom->add_option("second", dm.second, "growth, partition, or tree token")->required();
    dom->add_flag("--spherical", dm.spherical,
                  "compare growth functions of spherically symmetric trees");
    dom->add_flag("--height2", dm.height2, "compare height-2 children partitions p1,p2,...");
    dom->add_flag("--tree", dm.tree, "compare explicit trees (default)");
    dom->add_option("--horizon", dm.horizon, "levels checked in --spherical mode")
        ->capture_default_str();
    dom->add_option("--format", dm.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    dom->callback([&] { code = cmd_dominates(dm, out); });

    TildeOpts td;
    auto* tilde = app.add_subcommand(
        "tilde", "nondecreasing regularization of a growth function (convex-minorant increments)");
    tilde->add_option("--growth", td.growth, "mini-language or JSON file")->required();
    tilde->add_option("-N,--N,--depth", td.window, "window size")->capture_default_str();
    std::uint64_t slack_val = 0;
    auto* slack_opt = tilde->add_option("--slack", slack_val, "extra lookahead past the window");
    tilde->add_option("--route", td.route, "hull|recursive")
        ->check(CLI::IsMember({"hull", "recursive"}));
    tilde->add_option("--format", td.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    tilde->add_option("--out", td.out_dir, "directory for report.json + manifest.json");
    tilde->callback([&] {
        if (*slack_opt) td.slack = slack_val;
        code = cmd_tilde(td, out);
    });

    ClassifyOpts cl;
    auto* classify = app.add_subcommand(
        "classify", "explosion verdict for a growth function under power-law transit times");
    classify->add_option("--growth", cl.growth, "mini-language or JSON file")->required();
    classify->add_option("--alpha", cl.alpha, "transit law exponent near 0")
        ->capture_default_str();
    classify->add_option("--c", cl.c, "transit law constant near 0")->capture_default_str();
    classify->add_option("-N,--N,--depth", cl.window, "partial-sum window")
        ->capture_default_str();
    classify->add_option("--format", cl.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--out", cl.out_dir, "directory for report.json + manifest.json");
    classify->callback([&] { code = cmd_classify(cl, out); });

    SimulateOpts sm;
    auto* sim = app.add_subcommand(
        "simulate", "first-passage front simulation; writes trajectory.csv + summary.json");
    sim->add_option("--growth", sm.growth, "mini-language or JSON file")->required();
    sim->add_option("--mode", sm.mode, "beam|greedy|exact")
        ->check(CLI::IsMember({"beam", "greedy", "exact"}))
        ->capture_default_str();
    sim->add_option("-N,--N,--depth", sm.depth, "levels simulated")->capture_default_str();
    sim->add_option("--replicas", sm.replicas, "independent replicas")->capture_default_str();
    sim->add_option("--seed", sm.seed, "base seed; replica r uses stream r")
        ->capture_default_str();
    sim->add_option("--beam", sm.beam, "beam width (beam mode)")->capture_default_str();
    sim->add_option("--prune-k", sm.prune_k, "order statistics kept per front vertex")
        ->capture_default_str();
    sim->add_option("--alpha", sm.alpha, "transit law exponent near 0")->capture_default_str();
    sim->add_option("--c", sm.c, "transit law constant near 0")->capture_default_str();
    sim->add_option("--dist", sm.dist, "auto|exponential|power")
        ->check(CLI::IsMember({"auto", "exponential", "power"}))
        ->capture_default_str();
    sim->add_flag("--weighted", sm.weighted,
                  "minimize sums weighted by tilde-f(n)^(1/alpha) (beam mode)");
    sim->add_option("--tol", sm.tol, "relative band width around the limit constant")
        ->capture_default_str();
    sim->add_option("--out", sm.out_dir, "output directory")->capture_default_str();
    sim->callback([&] { code = cmd_simulate(sm, out); });

    ScanOpts sc;
    auto* scan = app.add_subcommand(
        "scan-conjecture",
        "random graded graphs vs the path-count inequality; exit 1 on any violation");
    scan->add_option("--count", sc.count, "instances to check")->capture_default_str();
    scan->add_option("--seed", sc.seed, "seed for the instance stream")->capture_default_str();
    scan->add_option("--max-levels", sc.max_levels, "levels per graph")->capture_default_str();
    scan->add_option("--max-vertices", sc.max_vertices, "vertices per graph")
        ->capture_default_str();
    scan->add_option("--max-denominator", sc.max_denominator, "corner denominators of the sets")
        ->capture_default_str();
    scan->add_option("--out", sc.out_dir, "directory for scan.json + manifest.json");
    scan->callback([&] { code = cmd_scan(sc, out); });

    std::vector<const char*> argv{"fpt"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const TableHorizonError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
    return code;
}

}  // namespace fpt
