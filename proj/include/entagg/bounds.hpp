#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "entagg/dist.hpp"

namespace entagg {

/// Subtractive term of the ratio-constrained entropy lower bound, in bits:
/// (c - 1 - ln c)/ln 2 with c = rho ln(rho)/(rho - 1). Zero at rho = 1 (the
/// closed form is 0/0 there; values within 1e-8 of 1 take the limit).
inline double theorem2_gap(double rho) {
    if (!(rho >= 1.0)) throw ParamError("rho must be >= 1");
    if (rho <= 1.0 + 1e-8) return 0.0;
    const double c = rho * std::log(rho) / (rho - 1.0);
    return std::max(0.0, (c - 1.0 - std::log(c)) / std::numbers::ln2);
}

/// log2 n - theorem2_gap(rho), floored at 0: a valid entropy lower bound for
/// any n-atom distribution whose max/min probability ratio is at most rho.
inline double theorem2_lower_bound(std::size_t n, double rho) {
    if (n < 1) throw ParamError("n must be >= 1");
    if (!(rho >= 1.0)) throw ParamError("rho must be >= 1");
    return std::max(0.0, std::log2(static_cast<double>(n)) - theorem2_gap(rho));
}

/// Subtractive term of the prior ratio bound, ln((rho+1)^2 / (4 rho)).
/// Kept in natural log exactly as that bound states it.
inline double prior_bound_gap(double rho) {
    if (!(rho >= 1.0)) throw ParamError("rho must be >= 1");
    return std::max(0.0, std::log((rho + 1.0) * (rho + 1.0) / (4.0 * rho)));
}

/// Both ratio bounds for an n-atom distribution, with their subtractive terms.
struct BoundReport {
    double rho = 1.0;
    std::size_t n = 1;
    double theorem2_bound = 0.0;  // bits
    double prior_bound = 0.0;     // bits minus a natural-log term, as published
    double gap_theorem2 = 0.0;    // bits
    double gap_prior = 0.0;       // nats, as published
};

inline BoundReport bound_report(std::size_t n, double rho) {
    if (n < 1) throw ParamError("n must be >= 1");
    BoundReport rep;
    rep.rho = rho;
    rep.n = n;
    rep.gap_theorem2 = theorem2_gap(rho);
    rep.gap_prior = prior_bound_gap(rho);
    const double log2n = std::log2(static_cast<double>(n));
    rep.theorem2_bound = std::max(0.0, log2n - rep.gap_theorem2);
    rep.prior_bound = std::max(0.0, log2n - rep.gap_prior);
    return rep;
}

/// The ratio-rho extremal distribution majorizing p: i atoms of rho*p_n, one
/// residual atom, n-i-1 atoms of p_n, with i = floor((1 - n p_n)/(p_n (rho-1))).
struct ZRhoDist {
    ProbDist base;
    double rho = 1.0;
    std::size_t i = 0;      // count of rho*p_n atoms
    double middle = 0.0;    // the residual atom, in [p_n, rho*p_n)
    ProbDist dist;
};

inline ZRhoDist build_z_rho(const ProbDist& p, double rho) {
    const double pn = p.min_prob();
    if (!(pn > 0.0)) throw SupportError("z_rho requires p_n > 0");
    if (!(rho > 1.0)) throw ParamError("rho must be > 1");
    if (p.max_prob() > rho * pn * (1.0 + kEpsCmp)) {
        throw RatioError("p_1/p_n exceeds rho");
    }
    const std::size_t n = p.size();
    const double numer = 1.0 - static_cast<double>(n) * pn;
    std::size_t i = 0;
    if (numer > 0.0) {
        double x = numer / (pn * (rho - 1.0));
        // snap quotients that are integers up to rounding, so exact rational
        // boundaries floor the way the real-arithmetic definition does
        const double nearest = std::round(x);
        if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) x = nearest;
        i = static_cast<std::size_t>(std::min(std::floor(x), static_cast<double>(n - 1)));
    }
    const double middle = 1.0 - (static_cast<double>(n) +
                                 static_cast<double>(i) * (rho - 1.0) - 1.0) * pn;
    std::vector<double> z;
    z.reserve(n);
    for (std::size_t j = 0; j < i; ++j) z.push_back(rho * pn);
    z.push_back(middle);
    for (std::size_t j = i + 1; j < n; ++j) z.push_back(pn);
    return ZRhoDist{p, rho, i, middle, ProbDist::make(std::move(z))};
}

/// One row per grid point for regenerating the two bound-comparison figures.
struct BoundRow {
    double rho = 1.0;
    double gap_theorem2 = 0.0;  // bits
    double gap_prior = 0.0;     // nats, as published
    double log2_rho = 0.0;      // the classical Jelinek-Schneider term
};

inline std::vector<BoundRow> bound_comparison_table(const std::vector<double>& rho_grid) {
    std::vector<BoundRow> rows;
    rows.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        if (!(rho >= 1.0)) throw ParamError("grid values must be >= 1");
        rows.push_back({rho, theorem2_gap(rho), prior_bound_gap(rho), std::log2(rho)});
    }
    return rows;
}

} // namespace entagg
