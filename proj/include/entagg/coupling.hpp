#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "entagg/aggregation.hpp"
#include "entagg/dist.hpp"

namespace entagg {

/// A bivariate distribution with prescribed marginals. Rows follow the
/// aggregated distribution (block sums descending), columns the source.
struct Coupling {
    std::vector<std::vector<double>> matrix;  // block_count x source_n
    ProbDist row_marginal;
    ProbDist col_marginal;

    /// Entropy in bits of the joint distribution (all cells).
    double joint_entropy() const {
        detail::CompensatedSum acc;
        for (const auto& row : matrix)
            for (double cell : row) acc.add(detail::neg_xlnx(cell));
        return acc.value() / std::numbers::ln2;
    }
};

namespace detail {

// Verifies that agg really aggregates p: blocks partition {0..n-1} and each
// block's mass matches the induced distribution entry.
inline void require_aggregation_of(const ProbDist& p, const Aggregation& agg) {
    const std::size_t n = p.size();
    if (agg.source_n != n) throw AggregationError("aggregation built for a different n");
    if (agg.blocks.size() != agg.dist.size() || agg.blocks.empty()) {
        throw AggregationError("block/distribution size mismatch");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < agg.blocks.size(); ++b) {
        const auto& blk = agg.blocks[b];
        if (blk.empty()) throw AggregationError("empty block");
        CompensatedSum s;
        for (std::size_t idx : blk) {
            if (idx >= n || seen[idx]) throw AggregationError("blocks do not partition the index set");
            seen[idx] = true;
            s.add(p[idx]);
        }
        if (std::abs(s.value() - agg.dist[b]) > kEpsCmp) {
            throw AggregationError("block sum does not match the induced distribution");
        }
    }
    for (bool covered : seen) {
        if (!covered) throw AggregationError("blocks do not cover the index set");
    }
}

} // namespace detail

/// The coupling M_q of p and its aggregation: row b carries p_j in column j
/// for every j in block b and zeros elsewhere. Its nonzero cells are exactly
/// the components of p, hence H(M_q) = H(p).
inline Coupling build_mq_coupling(const ProbDist& p, const Aggregation& agg) {
    detail::require_aggregation_of(p, agg);
    std::vector<std::vector<double>> matrix(agg.blocks.size(),
                                            std::vector<double>(p.size(), 0.0));
    for (std::size_t b = 0; b < agg.blocks.size(); ++b) {
        for (std::size_t j : agg.blocks[b]) matrix[b][j] = p[j];
    }
    return Coupling{std::move(matrix), agg.dist, p};
}

/// D(p, q) for an aggregation q of p. M_q attains the minimum coupling
/// entropy, so the pseudo-distance collapses to H(p) - H(q). In bits.
inline double d_distance_aggregation(const ProbDist& p, const Aggregation& agg) {
    detail::require_aggregation_of(p, agg);
    return entropy(p) - entropy(agg.dist);
}

/// Minimum coupling entropy W(p, q) for arbitrary marginals is its own hard
/// problem and is not computed here; only the aggregation case, where M_q is
/// provably optimal, is supported (see d_distance_aggregation).
[[noreturn]] inline double min_coupling_entropy(const ProbDist&, const ProbDist&) {
    throw ScopeError("general minimum-entropy coupling is out of scope; "
                     "D is evaluated only for aggregations of p");
}

/// Huffman-built m-atom approximation to the D-closest distribution.
struct ClosestDistResult {
    Aggregation aggregation;
    double d_value = 0.0;      // D(p, aggregation.dist)
    double certificate = 0.0;  // H(R_m(p)) - H(aggregation.dist) >= suboptimality
};

/// Returns q with D(p, q) <= D(p, q*) + alpha_constant(), where q* is the
/// D-closest m-atom distribution. The certificate bounds the suboptimality
/// and never exceeds alpha_constant().
inline ClosestDistResult approximate_closest_dist(const ProbDist& p, std::size_t m) {
    auto [agg, trace] = huffman_aggregate(p, m);
    const double h_q = entropy(agg.dist);
    const double d = entropy(p) - h_q;
    const double certificate = entropy(r_operator(p, m)) - h_q;
    return ClosestDistResult{std::move(agg), d, certificate};
}

} // namespace entagg
