#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "entagg/dist.hpp"

namespace entagg {

/// Outcome of a majorization test a <= b, with the per-prefix witness.
struct MajorizationVerdict {
    bool holds = true;
    /// 1-based length of the first failing prefix; set iff holds is false.
    std::optional<std::size_t> first_violation_index;
    /// sum_{k<=i} b_k - sum_{k<=i} a_k for i = 1..n.
    std::vector<double> prefix_gaps;
};

/// Extends the shorter distribution with exact zeros so both have the same
/// length. Entropy and majorization verdicts are unchanged by the padding.
inline std::pair<ProbDist, ProbDist> pad_to_common_length(const ProbDist& a,
                                                          const ProbDist& b) {
    const std::size_t n = std::max(a.size(), b.size());
    auto pad = [n](const ProbDist& d) {
        std::vector<double> v = d.probs();
        v.resize(n, 0.0);
        return ProbDist::make(std::move(v));
    };
    return {pad(a), pad(b)};
}

/// Is a majorized by b (a <= b)? Holds iff every prefix sum of b dominates the
/// corresponding prefix sum of a; ties count as satisfied (gap >= -kEpsCmp).
/// Inputs of unequal length are compared after zero-padding.
inline MajorizationVerdict majorizes(const ProbDist& a, const ProbDist& b) {
    const std::size_t n = std::max(a.size(), b.size());
    MajorizationVerdict verdict;
    verdict.prefix_gaps.reserve(n);
    detail::CompensatedSum sum_a;
    detail::CompensatedSum sum_b;
    for (std::size_t i = 0; i < n; ++i) {
        sum_a.add(i < a.size() ? a[i] : 0.0);
        sum_b.add(i < b.size() ? b[i] : 0.0);
        const double gap = sum_b.value() - sum_a.value();
        verdict.prefix_gaps.push_back(gap);
        if (gap < -kEpsCmp && verdict.holds) {
            verdict.holds = false;
            verdict.first_violation_index = i + 1;
        }
    }
    return verdict;
}

/// H(a) - H(b) - D(b||a) for a <= b. Nonnegative by the refined Schur
/// inequality; callers may rely on result >= -1e-9.
/// Throws MajorizationError if a <= b does not hold.
inline double check_schur_gap(const ProbDist& a, const ProbDist& b) {
    if (!majorizes(a, b).holds) {
        throw MajorizationError("a is not majorized by b");
    }
    auto [ap, bp] = pad_to_common_length(a, b);
    return entropy(ap) - entropy(bp) - kl_divergence(bp, ap);
}

} // namespace entagg
