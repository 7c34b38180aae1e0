#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entagg/aggregation.hpp"
#include "entagg/bounds.hpp"
#include "entagg/coupling.hpp"
#include "entagg/majorization.hpp"
#include "entagg/tunstall.hpp"

namespace entagg {

/// Deterministic sampling on top of mt19937_64. The transforms are written out
/// here because the standard <random> distributions are implementation-defined
/// and a fixed seed must reproduce byte-identical reports everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // open interval (0, 1)
    double uniform01() { return static_cast<double>((gen_() >> 11) | 1ull) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
    std::size_t in_range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    /// Dirichlet(1,...,1) point: normalized exponentials, all atoms positive.
    ProbDist dist(std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v) x = -std::log(uniform01());
        return ProbDist::make(std::move(v), true);
    }

    /// Random distribution with max/min probability ratio at most rho.
    ProbDist ratio_dist(std::size_t n, double rho) {
        std::vector<double> v(n);
        for (double& x : v) x = uniform(1.0, rho);
        return ProbDist::make(std::move(v), true);
    }

    /// Uniformly labeled surjection of {0..n-1} onto m blocks.
    Aggregation aggregation(const ProbDist& p, std::size_t m) {
        const std::size_t n = p.size();
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[below(i + 1)]);
        std::vector<std::size_t> assign(n);
        for (std::size_t b = 0; b < m; ++b) assign[perm[b]] = b;  // every block inhabited
        for (std::size_t j = m; j < n; ++j) assign[perm[j]] = below(m);
        return make_aggregation(p, assign);
    }

private:
    std::mt19937_64 gen_;
};

struct SelftestOptions {
    std::uint64_t seed = 20240901;
    std::size_t cases = 300;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

namespace detail {

constexpr double kTol = 1e-9;

inline void tally(SuiteResult& r, bool ok) { ok ? ++r.passed : ++r.failed; }

inline SuiteResult suite_entropy_basics(Rng& rng, std::size_t cases) {
    SuiteResult r{"entropy_basics"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = rng.in_range(1, 64);
        const ProbDist p = rng.dist(n);
        const double h = entropy(p);
        bool ok = h >= -kTol && h <= std::log2(static_cast<double>(n)) + kTol;
        if (n >= 2) {
            const ProbDist q = rng.dist(n);
            ok = ok && kl_divergence(q, p) >= -kTol;
        }
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_majorization_order(Rng& rng, std::size_t cases) {
    SuiteResult r{"majorization_order"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = rng.in_range(3, 24);
        const std::size_t m = rng.in_range(2, n - 1);
        const ProbDist p = rng.dist(n);
        const ProbDist rm = r_operator(p, m);
        const Aggregation q = rng.aggregation(p, m);
        const bool ok = majorizes(p, rm).holds && majorizes(p, q.dist).holds &&
                        majorizes(rm, q.dist).holds;
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_schur_refinement(Rng& rng, std::size_t cases) {
    SuiteResult r{"schur_refinement"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = rng.in_range(3, 24);
        const std::size_t m = rng.in_range(2, n - 1);
        const ProbDist p = rng.dist(n);
        const Aggregation q = rng.aggregation(p, m);
        bool ok = entropy(p) >= entropy(q.dist) - kTol;
        ok = ok && check_schur_gap(p, q.dist) >= -kTol;
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_aggregation_guarantees(Rng& rng, std::size_t cases) {
    SuiteResult r{"aggregation_guarantees"};
    const double alpha = alpha_constant();
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = rng.in_range(4, 10);
        const std::size_t m = rng.in_range(2, n - 1);
        const ProbDist p = rng.dist(n);
        const double h_r = entropy(r_operator(p, m));
        const double h_max = entropy(exact_max_aggregation(p, m).dist);
        auto [huff, trace] = huffman_aggregate(p, m);
        const double h_huff = entropy(huff.dist);

        double h_min = h_max;
        std::vector<double> sums(m);
        for_each_aggregation(n, m, [&](const std::vector<std::size_t>& assign) {
            std::fill(sums.begin(), sums.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) sums[assign[i]] += p[i];
            double h = 0.0;
            for (double s : sums) h += neg_xlnx(s);
            h_min = std::min(h_min, h / std::numbers::ln2);
        });

        bool ok = h_max <= h_r + kTol;
        ok = ok && h_huff >= h_r - alpha - kTol;
        ok = ok && h_huff >= (10.0 / 11.0) * h_max - kTol;
        ok = ok && std::abs(entropy(q_operator(p, m).dist) - h_min) <= kTol;
        ok = ok && trace.merge_steps.size() == n - m;
        ok = ok && trace.untouched_prefix_len <= istar(p, m);
        const double tail_min = huff.dist.min_prob();
        if (trace.untouched_prefix_len < m && tail_min > 0.0) {
            ok = ok && huff.dist[trace.untouched_prefix_len] <= 2.0 * tail_min + kEpsCmp;
        }
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_ratio_bound(Rng& rng, std::size_t cases) {
    SuiteResult r{"ratio_bound"};
    const double rhos[] = {1.5, 2.0, 4.0, 10.0};
    for (std::size_t c = 0; c < cases; ++c) {
        const double rho = rhos[c % 4];
        const std::size_t n = rng.in_range(2, 64);
        const ProbDist p = rng.ratio_dist(n, rho);
        const ZRhoDist z = build_z_rho(p, rho);
        const double lb = theorem2_lower_bound(n, rho);
        bool ok = entropy(p) >= entropy(z.dist) - kTol;
        ok = ok && entropy(z.dist) >= lb - kTol;
        ok = ok && majorizes(p, z.dist).holds;
        ok = ok && z.middle >= p.min_prob() - kEpsCmp &&
             z.middle < rho * p.min_prob() + kEpsCmp;
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_bound_dominance(Rng& rng, std::size_t cases) {
    SuiteResult r{"bound_dominance"};
    for (std::size_t c = 0; c < cases; ++c) {
        const double rho = rng.uniform(1.0, 100.0);
        const double gap = theorem2_gap(rho);
        tally(r, gap <= prior_bound_gap(rho) + kEpsCmp && gap <= std::log2(rho) + kEpsCmp);
    }
    return r;
}

inline SuiteResult suite_coupling(Rng& rng, std::size_t cases) {
    SuiteResult r{"coupling"};
    const double alpha = alpha_constant();
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = rng.in_range(4, 10);
        const std::size_t m = rng.in_range(2, n - 1);
        const ProbDist p = rng.dist(n);
        const Aggregation q = rng.aggregation(p, m);
        const Coupling mq = build_mq_coupling(p, q);
        bool ok = std::abs(mq.joint_entropy() - entropy(p)) <= kTol;
        ok = ok && d_distance_aggregation(p, q) >= -kEpsCmp;
        const ClosestDistResult approx = approximate_closest_dist(p, m);
        const double d_star = entropy(p) - entropy(exact_max_aggregation(p, m).dist);
        ok = ok && approx.d_value <= d_star + alpha + kTol;
        ok = ok && approx.certificate <= alpha + kTol;
        tally(r, ok);
    }
    return r;
}

inline SuiteResult suite_tunstall(Rng& rng, std::size_t cases) {
    SuiteResult r{"tunstall"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t k = 2 + (c % 2);
        std::vector<double> probs(k);
        double total = 0.0;
        for (double& x : probs) {
            x = rng.uniform(0.1, 1.0);
            total += x;
        }
        for (double& x : probs) x /= total;
        const SourceModel src = SourceModel::make(probs);
        const std::size_t t = rng.in_range(1, 256);
        const std::size_t target = 1 + t * (k - 1);
        const RateReport rep = rate_report(src, target);
        const TunstallTree tree = build_tunstall_tree(src, target);
        double lo = 1.0, hi = 0.0;
        for (const auto& leaf : tree.leaves) {
            lo = std::min(lo, leaf.prob);
            hi = std::max(hi, leaf.prob);
        }
        bool ok = hi <= src.rho * lo * (1.0 + kEpsCmp);
        ok = ok && std::abs(rep.h_leaves / rep.h_source - rep.expected_len) <= kTol;
        if (rep.new_bound) ok = ok && rep.rate <= *rep.new_bound + kTol;
        if (rep.new_bound && rep.js_bound) ok = ok && *rep.new_bound <= *rep.js_bound + kTol;
        const double log2n = std::log2(static_cast<double>(target));
        ok = ok && rep.h_leaves >= log2n - theorem2_gap(src.rho) - kTol;
        tally(r, ok);
    }
    return r;
}

} // namespace detail

/// Runs every randomized property suite; deterministic for a fixed seed.
inline std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
    std::vector<SuiteResult> results;
    Rng rng(opt.seed);
    results.push_back(detail::suite_entropy_basics(rng, opt.cases));
    results.push_back(detail::suite_majorization_order(rng, opt.cases));
    results.push_back(detail::suite_schur_refinement(rng, opt.cases));
    results.push_back(detail::suite_aggregation_guarantees(rng, opt.cases));
    results.push_back(detail::suite_ratio_bound(rng, opt.cases));
    results.push_back(detail::suite_bound_dominance(rng, opt.cases));
    results.push_back(detail::suite_coupling(rng, opt.cases));
    results.push_back(detail::suite_tunstall(rng, opt.cases));
    return results;
}

} // namespace entagg
