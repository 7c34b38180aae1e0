#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "entagg/bounds.hpp"
#include "entagg/dist.hpp"

namespace entagg {

/// A stationary memoryless source. Symbol k is the k-th most probable symbol;
/// rho is the reciprocal of the least probable symbol's probability.
struct SourceModel {
    ProbDist symbol_probs;
    double rho = 1.0;

    static SourceModel make(std::vector<double> probs) {
        ProbDist d = ProbDist::make(std::move(probs));
        if (d.size() < 2) throw ParamError("source alphabet needs K >= 2 symbols");
        if (!(d.min_prob() > 0.0)) {
            throw ValidationError("source symbols must have positive probability");
        }
        const double r = 1.0 / d.min_prob();
        return SourceModel{std::move(d), r};
    }

    std::size_t alphabet_size() const { return symbol_probs.size(); }
};

/// Leaf of a parse tree: the source segment, its probability (product of the
/// symbol probabilities along the path) and its depth.
struct TunstallLeaf {
    std::vector<int> word;
    double prob = 1.0;
    int depth = 0;
};

/// Full K-ary parse tree; leaves in lexicographic word order.
struct TunstallTree {
    std::vector<TunstallLeaf> leaves;
    std::size_t n_leaves = 0;
    std::size_t internal_count = 0;  // n_leaves = 1 + internal_count * (K - 1)
};

/// Tunstall construction: repeatedly expand the most probable leaf into K
/// children, ties broken by lexicographically smallest word. Valid targets are
/// 1 + t(K-1); target = 1 yields the root-only tree.
inline TunstallTree build_tunstall_tree(const SourceModel& src,
                                        std::size_t n_leaves_target) {
    const std::size_t k = src.alphabet_size();
    if (n_leaves_target < 1 || (n_leaves_target - 1) % (k - 1) != 0) {
        throw ParamError("leaf count " + std::to_string(n_leaves_target) +
                         " is not reachable: need 1 + t*(K-1)");
    }
    const std::size_t expansions = (n_leaves_target - 1) / (k - 1);

    auto lower_priority = [](const TunstallLeaf& a, const TunstallLeaf& b) {
        if (a.prob != b.prob) return a.prob < b.prob;
        return a.word > b.word;
    };
    std::priority_queue<TunstallLeaf, std::vector<TunstallLeaf>, decltype(lower_priority)>
        frontier(lower_priority);
    frontier.push(TunstallLeaf{});
    for (std::size_t t = 0; t < expansions; ++t) {
        TunstallLeaf leaf = frontier.top();
        frontier.pop();
        for (std::size_t s = 0; s < k; ++s) {
            TunstallLeaf child;
            child.word = leaf.word;
            child.word.push_back(static_cast<int>(s));
            child.prob = leaf.prob * src.symbol_probs[s];
            child.depth = leaf.depth + 1;
            frontier.push(std::move(child));
        }
    }

    TunstallTree tree;
    tree.n_leaves = n_leaves_target;
    tree.internal_count = expansions;
    tree.leaves.reserve(frontier.size());
    while (!frontier.empty()) {
        tree.leaves.push_back(frontier.top());
        frontier.pop();
    }
    std::sort(tree.leaves.begin(), tree.leaves.end(),
              [](const TunstallLeaf& a, const TunstallLeaf& b) { return a.word < b.word; });
    return tree;
}

/// E[L]: probability-weighted mean segment length, in source symbols.
inline double expected_length(const TunstallTree& tree) {
    detail::CompensatedSum acc;
    for (const auto& leaf : tree.leaves) acc.add(leaf.prob * leaf.depth);
    return acc.value();
}

/// Compression-rate report for one (source, leaf count) pair. The bounds are
/// absent when their denominators are nonpositive.
struct RateReport {
    std::size_t n_leaves = 0;
    double h_source = 0.0;     // H(P), bits/symbol
    double h_leaves = 0.0;     // H(W), bits
    double expected_len = 0.0; // E[L], symbols
    double rate = 0.0;         // ceil(log2 n)/E[L], bits/symbol
    std::optional<double> js_bound;   // classical: denominator log2 n - log2 rho
    std::optional<double> new_bound;  // denominator log2 n - theorem2_gap(rho)
};

inline RateReport rate_report(const SourceModel& src, std::size_t n_leaves_target) {
    if (n_leaves_target < 2) {
        throw BoundDomainError("rate undefined for fewer than 2 segments");
    }
    const TunstallTree tree = build_tunstall_tree(src, n_leaves_target);
    RateReport rep;
    rep.n_leaves = tree.n_leaves;
    rep.h_source = entropy(src.symbol_probs);
    detail::CompensatedSum hw;
    for (const auto& leaf : tree.leaves) hw.add(detail::neg_xlnx(leaf.prob));
    rep.h_leaves = hw.value() / std::numbers::ln2;
    rep.expected_len = expected_length(tree);
    const double codeword_bits = static_cast<double>(ceil_log2(tree.n_leaves));
    rep.rate = codeword_bits / rep.expected_len;
    const double log2n = std::log2(static_cast<double>(tree.n_leaves));
    const double js_denom = log2n - std::log2(src.rho);
    if (js_denom > 0.0) rep.js_bound = codeword_bits * rep.h_source / js_denom;
    const double new_denom = log2n - theorem2_gap(src.rho);
    if (new_denom > 0.0) rep.new_bound = codeword_bits * rep.h_source / new_denom;
    return rep;
}

} // namespace entagg
