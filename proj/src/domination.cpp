#include "fpt/domination.hpp"

#include <algorithm>

#include "fpt/errors.hpp"

namespace fpt {

SphericalDominationReport dominates_spherical(const GrowthFunction& f, const GrowthFunction& g,
                                              std::uint64_t horizon) {
    if (horizon < 1) throw ContractError("domination horizon must be >= 1");
    SphericalDominationReport r;
    r.dominates = true;
    BigInt pf(1), pg(1);
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        pf *= f.value_int(n);
        pg *= g.value_int(n);
        if (pf < pg) {
            r.dominates = false;
            r.first_failing_level = n;
            return r;
        }
    }
    return r;
}

Height2DominationReport dominates_height2(const std::vector<std::uint64_t>& p,
                                          const std::vector<std::uint64_t>& q) {
    auto check_sorted = [](const std::vector<std::uint64_t>& part, const char* name) {
        if (!std::is_sorted(part.begin(), part.end(), std::greater<>()))
            throw ContractError(std::string("partition ") + name + " must be nonincreasing");
    };
    check_sorted(p, "p");
    check_sorted(q, "q");

    const std::size_t len = std::max(p.size(), q.size());
    auto at = [](const std::vector<std::uint64_t>& v, std::size_t i) -> std::uint64_t {
        return i < v.size() ? v[i] : 0;
    };
    Height2DominationReport r;
    // tail sums over i > k for k = 0, 1, ...; k = len and beyond are 0 >= 0
    for (std::size_t k = 0; k < len; ++k) {
        std::uint64_t sp = 0, sq = 0;
        for (std::size_t i = k; i < len; ++i) {
            sp += at(p, i);
            sq += at(q, i);
        }
        if (sp < sq) {
            r.dominates = false;
            r.violated_tail_index = k;
            // exponent of the separating set: the violated entry of q, or the
            // largest entry in sight when the totals themselves differ
            r.witness_exponent =
                k == 0 ? std::max(at(p, 0), at(q, 0)) : at(q, k - 1);
            if (*r.witness_exponent < 1) r.witness_exponent = 1;
            return r;
        }
    }
    r.dominates = true;
    return r;
}

CountBoundCheck check_count_bound(const GradedGraph& g, const BoxUnion& B, std::size_t cell_cap,
                                  std::size_t work_cap) {
    CountBoundCheck c;
    c.full_paths = g.count_full_paths();
    c.lhs = Rational(graded_all_paths_prob(g, B.complement(cell_cap), cell_cap, work_cap));
    const Rational miss = 1 - B.measure(cell_cap);
    constexpr std::uint64_t kExponentCap = 1'000'000;
    if (c.full_paths > kExponentCap) throw SizeError("full path count exceeds exact-power cap");
    c.rhs = rational_pow(miss, static_cast<unsigned long>(c.full_paths));
    c.holds = c.lhs >= c.rhs;
    return c;
}

}  // namespace fpt
