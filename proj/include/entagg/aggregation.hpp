#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "entagg/dist.hpp"

namespace entagg {

/// A partition of the source index set {0..n-1} into m nonempty blocks
/// together with the induced m-atom distribution of block sums.
///
/// blocks[i] lists source indices ascending and induces dist[i]; blocks are
/// ordered by block sum descending, ties by lexicographically smaller block.
struct Aggregation {
    std::vector<std::vector<std::size_t>> blocks;
    ProbDist dist;
    std::size_t source_n = 0;

    std::size_t block_count() const { return blocks.size(); }
};

/// Bookkeeping of a Huffman-merge run.
struct HuffmanTrace {
    struct Merge {
        std::size_t rep_a;    // smallest source index inside the first merged atom
        std::size_t rep_b;    // smallest source index inside the second (rep_a < rep_b)
        double merged_value;  // mass of the atom the step created
    };
    std::vector<Merge> merge_steps;          // exactly n - m entries
    std::size_t untouched_prefix_len = 0;    // leading output atoms no merge produced
    double tail_mass = 0.0;                  // total mass beyond that prefix
};

namespace detail {

// Orders blocks by (sum desc, lexicographically smaller index set first) and
// builds the induced distribution so that dist[i] is exactly blocks[i]'s sum.
inline Aggregation finalize_aggregation(std::vector<std::vector<std::size_t>> blocks,
                                        const ProbDist& p) {
    std::vector<std::pair<double, std::vector<std::size_t>>> keyed;
    keyed.reserve(blocks.size());
    for (auto& blk : blocks) {
        std::sort(blk.begin(), blk.end());
        CompensatedSum s;
        for (std::size_t idx : blk) s.add(p[idx]);
        keyed.emplace_back(s.value(), std::move(blk));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    std::vector<std::vector<std::size_t>> ordered;
    std::vector<double> sums;
    ordered.reserve(keyed.size());
    sums.reserve(keyed.size());
    for (auto& [sum, blk] : keyed) {
        sums.push_back(sum);
        ordered.push_back(std::move(blk));
    }
    return Aggregation{std::move(ordered), ProbDist::make(std::move(sums)), p.size()};
}

inline void require_m_range(std::size_t m, std::size_t n) {
    if (m < 2 || m >= n) {
        throw ParamError("m must satisfy 2 <= m < n");
    }
}

} // namespace detail

/// The maximum index i in {1..m-1} with p_i >= (sum of the tail past i)/(m-i),
/// or 0 when no such index exists (equivalently p_1 < 1/m): the uniform branch.
inline std::size_t istar(const ProbDist& p, std::size_t m) {
    detail::require_m_range(m, p.size());
    const std::size_t n = p.size();
    // suffix[i] = sum of p_{i+1..n} (1-based), i.e. the mass strictly past index i
    std::vector<double> suffix(m, 0.0);
    detail::CompensatedSum tail;
    for (std::size_t j = n; j-- > m - 1;) tail.add(p[j]);
    suffix[m - 1] = tail.value();
    for (std::size_t i = m - 1; i-- > 0;) {
        tail.add(p[i]);
        suffix[i] = tail.value();
    }
    for (std::size_t i = m - 1; i >= 1; --i) {
        if (p[i - 1] >= suffix[i] / static_cast<double>(m - i)) return i;
    }
    return 0;
}

/// R_m(p): keeps the top i* atoms and spreads the remaining mass uniformly over
/// the other m - i* slots; the uniform m-atom distribution when i* = 0.
/// The entropy-maximal element of the m-simplex among those majorizing p.
inline ProbDist r_operator(const ProbDist& p, std::size_t m) {
    const std::size_t i = istar(p, m);
    std::vector<double> r;
    r.reserve(m);
    detail::CompensatedSum tail;
    for (std::size_t j = i; j < p.size(); ++j) tail.add(p[j]);
    const double level = tail.value() / static_cast<double>(m - i);
    for (std::size_t j = 0; j < i; ++j) r.push_back(p[j]);
    for (std::size_t j = i; j < m; ++j) r.push_back(level);
    return ProbDist::make(std::move(r));
}

/// Q_m(p): merges the n-m+1 largest atoms into one block and keeps the rest as
/// singletons; the exact minimizer of H(f(X)) over surjections onto m symbols.
/// m = 1 (total merge) and m = n (identity) are the degenerate limits.
inline Aggregation q_operator(const ProbDist& p, std::size_t m) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) throw ParamError("m must satisfy 1 <= m <= n");
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(m);
    std::vector<std::size_t> head(n - m + 1);
    for (std::size_t j = 0; j < head.size(); ++j) head[j] = j;
    blocks.push_back(std::move(head));
    for (std::size_t j = n - m + 1; j < n; ++j) blocks.push_back({j});
    return detail::finalize_aggregation(std::move(blocks), p);
}

/// The additive approximation constant 1 - (1 + ln ln 2)/ln 2 < 0.08608.
inline double alpha_constant() {
    return 1.0 - (1.0 + std::log(std::numbers::ln2)) / std::numbers::ln2;
}

/// Huffman aggregation: exactly n - m steps, each merging the two smallest
/// current atoms. Ties on value are broken by merging the atoms holding the
/// largest source indices, so traces are deterministic.
///
/// Guarantees (tested, not enforced here): H(result) >= H(R_m(p)) - alpha and
/// H(result) >= (10/11) * max over all m-block aggregations.
inline std::pair<Aggregation, HuffmanTrace> huffman_aggregate(const ProbDist& p,
                                                              std::size_t m) {
    detail::require_m_range(m, p.size());
    const std::size_t n = p.size();

    // block bookkeeping is union-find over the source indices
    std::vector<std::size_t> parent(n);
    std::vector<std::size_t> min_index(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = min_index[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    struct Atom {
        double value;
        std::size_t max_index;  // largest source index inside; unique per atom
        std::size_t root;
    };
    // smallest value first; among equal values, larger source indices first
    auto cmp = [](const Atom& x, const Atom& y) {
        if (x.value != y.value) return x.value < y.value;
        return x.max_index > y.max_index;
    };
    std::set<Atom, decltype(cmp)> queue(cmp);
    for (std::size_t i = 0; i < n; ++i) queue.insert({p[i], i, i});

    HuffmanTrace trace;
    trace.merge_steps.reserve(n - m);
    for (std::size_t step = 0; step < n - m; ++step) {
        const Atom a = *queue.begin();
        queue.erase(queue.begin());
        const Atom b = *queue.begin();
        queue.erase(queue.begin());

        std::size_t ra = min_index[a.root];
        std::size_t rb = min_index[b.root];
        if (ra > rb) std::swap(ra, rb);
        const double value = a.value + b.value;
        trace.merge_steps.push_back({ra, rb, value});

        parent[b.root] = a.root;
        min_index[a.root] = ra;
        queue.insert({value, std::max(a.max_index, b.max_index), a.root});
    }

    std::size_t next_block = 0;
    std::vector<std::size_t> block_id(n, n);
    for (const Atom& atom : queue) block_id[atom.root] = next_block++;
    std::vector<std::vector<std::size_t>> blocks(m);
    for (std::size_t i = 0; i < n; ++i) blocks[block_id[find(i)]].push_back(i);
    Aggregation agg = detail::finalize_aggregation(std::move(blocks), p);

    std::size_t iq = 0;
    while (iq < agg.blocks.size() && agg.blocks[iq].size() == 1) ++iq;
    trace.untouched_prefix_len = iq;
    detail::CompensatedSum s;
    for (std::size_t j = iq; j < agg.dist.size(); ++j) s.add(agg.dist[j]);
    trace.tail_mass = s.value();
    return {std::move(agg), std::move(trace)};
}

/// Builds the aggregation induced by an arbitrary block assignment
/// (assignment[i] = label of source index i; labels need not be contiguous).
inline Aggregation make_aggregation(const ProbDist& p,
                                    const std::vector<std::size_t>& assignment) {
    if (assignment.size() != p.size()) {
        throw AggregationError("assignment length differs from the distribution");
    }
    std::vector<std::size_t> labels = assignment;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<std::vector<std::size_t>> blocks(labels.size());
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const auto it = std::lower_bound(labels.begin(), labels.end(), assignment[i]);
        blocks[static_cast<std::size_t>(it - labels.begin())].push_back(i);
    }
    return detail::finalize_aggregation(std::move(blocks), p);
}

/// Visits every partition of {0..n-1} into exactly m nonempty blocks, encoded
/// as a restricted-growth string (assign[i] = block of index i), in
/// lexicographic string order. fn receives the assignment vector.
template <class Fn>
void for_each_aggregation(std::size_t n, std::size_t m, Fn&& fn) {
    if (n == 0 || m == 0 || m > n) throw ParamError("need 1 <= m <= n");
    std::vector<std::size_t> assign(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (pos == n) {
            if (used == m) fn(std::as_const(assign));
            return;
        }
        if (used + (n - pos) < m) return;  // cannot open enough blocks anymore
        const std::size_t limit = std::min(used + 1, m);
        for (std::size_t c = 0; c < limit; ++c) {
            assign[pos] = c;
            self(self, pos + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
}

/// Exhaustive maximum-entropy aggregation (the NP-hard target). Enumerates all
/// partitions into exactly m blocks; ties resolve to the lexicographically
/// smallest restricted-growth string. Guarded by limit_n (Bell-number cost).
inline Aggregation exact_max_aggregation(const ProbDist& p, std::size_t m,
                                         std::size_t limit_n = 12) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) throw ParamError("m must satisfy 1 <= m <= n");
    if (n > limit_n) {
        throw SizeError("n = " + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(limit_n));
    }
    std::vector<double> sums(m);
    std::vector<std::size_t> best;
    double best_h = -1.0;  // nats; ordering is scale-invariant
    for_each_aggregation(n, m, [&](const std::vector<std::size_t>& assign) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) sums[assign[i]] += p[i];
        double h = 0.0;
        for (double s : sums) h += detail::neg_xlnx(s);
        if (h > best_h) {
            best_h = h;
            best = assign;
        }
    });
    std::vector<std::vector<std::size_t>> blocks(m);
    for (std::size_t i = 0; i < n; ++i) blocks[best[i]].push_back(i);
    return detail::finalize_aggregation(std::move(blocks), p);
}

/// A 3-Partition instance mapped to the aggregation problem: p_i = a_i/(mB).
/// The exhaustive maximum hits target_entropy = log2 m iff the instance is YES.
struct ThreePartitionInstance {
    ProbDist dist;
    std::size_t m = 0;
    double target_entropy = 0.0;
};

/// Builds the reduction instance from 3m positive integers with B/4 < a_i < B/2
/// where B = (sum a_i)/m. Bounds are checked in exact integer arithmetic;
/// element and count caps keep every product inside 64 bits.
inline ThreePartitionInstance gen_3partition_instance(const std::vector<std::uint64_t>& a) {
    if (a.empty() || a.size() % 3 != 0) {
        throw InstanceError("need 3m integers for some m >= 1");
    }
    if (a.size() > (std::uint64_t{1} << 20)) {
        throw InstanceError("instance too large");
    }
    const std::size_t m = a.size() / 3;
    std::uint64_t total = 0;
    for (std::uint64_t v : a) {
        if (v == 0 || v > (std::uint64_t{1} << 40)) {
            throw InstanceError("elements must be in [1, 2^40]");
        }
        total += v;
    }
    for (std::uint64_t v : a) {
        const std::uint64_t scaled = v * static_cast<std::uint64_t>(m);
        if (!(4 * scaled > total && 2 * scaled < total)) {
            throw InstanceError("element violates B/4 < a_i < B/2");
        }
    }
    const double sum = static_cast<double>(total);  // = m * B
    std::vector<double> probs;
    probs.reserve(a.size());
    for (std::uint64_t v : a) probs.push_back(static_cast<double>(v) / sum);
    return ThreePartitionInstance{ProbDist::make(std::move(probs)), m,
                                  std::log2(static_cast<double>(m))};
}

} // namespace entagg
