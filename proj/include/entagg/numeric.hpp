#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace entagg {

// Tolerance for sum-to-one validation; double accumulation over <= 1e6 atoms
// stays well inside this.
inline constexpr double kEpsSum = 1e-9;

// Tolerance for equality comparisons of probabilities and prefix gaps.
inline constexpr double kEpsCmp = 1e-12;

namespace detail {

// Neumaier-compensated accumulator. Prefix-sum verdicts near equality
// (e.g. p vs R_m(p) at index i*) must not flip on rounding.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + carry; }
};

// -x ln x in nats, with the 0 log(1/0) = 0 convention.
inline double neg_xlnx(double x) {
    return x > 0.0 ? -x * std::log(x) : 0.0;
}

// Shannon entropy in bits of an arbitrary range of masses: summed in natural
// log, converted once.
template <class It>
double entropy_bits(It first, It last) {
    CompensatedSum acc;
    for (; first != last; ++first) acc.add(neg_xlnx(*first));
    return acc.value() / std::numbers::ln2;
}

} // namespace detail

// ceil(log2 n) over the integers; exact at powers of two. n >= 1.
inline int ceil_log2(std::uint64_t n) {
    return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

} // namespace entagg
