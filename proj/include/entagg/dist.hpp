#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "entagg/errors.hpp"
#include "entagg/numeric.hpp"

namespace entagg {

/// A validated probability distribution, kept sorted non-increasing.
///
/// Zero atoms are retained rather than stripped: padding semantics for
/// majorization of unequal-length vectors rely on explicit lengths.
class ProbDist {
public:
    /// Sorts non-increasing (stable, so ties keep input order) and validates:
    /// every entry >= 0, at least one entry, sum within kEpsSum of 1.
    /// With normalize = true the values are first divided by their sum.
    static ProbDist make(std::vector<double> values, bool normalize = false) {
        if (values.empty()) throw ValidationError("probability vector is empty");
        detail::CompensatedSum total;
        for (double v : values) {
            if (!std::isfinite(v) || v < 0.0) {
                throw ValidationError("probability entries must be finite and nonnegative");
            }
            total.add(v);
        }
        const double sum = total.value();
        if (normalize) {
            if (sum <= 0.0) throw ValidationError("cannot normalize a zero vector");
            for (double& v : values) v /= sum;
        } else if (std::abs(sum - 1.0) > kEpsSum) {
            throw SumError("probabilities sum to " + std::to_string(sum) +
                           ", outside tolerance of 1");
        }
        std::stable_sort(values.begin(), values.end(), std::greater<double>());
        return ProbDist(std::move(values));
    }

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& probs() const { return p_; }
    double max_prob() const { return p_.front(); }
    double min_prob() const { return p_.back(); }

    auto begin() const { return p_.begin(); }
    auto end() const { return p_.end(); }

    bool operator==(const ProbDist&) const = default;

private:
    explicit ProbDist(std::vector<double> sorted) : p_(std::move(sorted)) {}
    std::vector<double> p_;
};

inline ProbDist make_dist(std::vector<double> values, bool normalize = false) {
    return ProbDist::make(std::move(values), normalize);
}

/// Shannon entropy in bits, -sum p_i log2 p_i with 0 log(1/0) = 0.
inline double entropy(const ProbDist& p) {
    return detail::entropy_bits(p.begin(), p.end());
}

/// Relative entropy D(b||a) = sum b_i log2(b_i / a_i), in bits.
///
/// The shorter argument is treated as zero-extended to the longer one's
/// length. Throws SupportError where b_i > 0 but a_i = 0.
inline double kl_divergence(const ProbDist& b, const ProbDist& a) {
    const std::size_t n = std::max(b.size(), a.size());
    detail::CompensatedSum acc;
    for (std::size_t i = 0; i < n; ++i) {
        const double bi = i < b.size() ? b[i] : 0.0;
        if (bi <= 0.0) continue;
        const double ai = i < a.size() ? a[i] : 0.0;
        if (ai <= 0.0) {
            throw SupportError("support violation: b has mass where a is zero");
        }
        acc.add(bi * std::log(bi / ai));
    }
    return acc.value() / std::numbers::ln2;
}

} // namespace entagg
