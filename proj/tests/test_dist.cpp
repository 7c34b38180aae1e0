#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "entagg/dist.hpp"
#include "entagg/selftest.hpp"

using Catch::Approx;
using namespace entagg;

TEST_CASE("make_dist sorts non-increasing") {
    const ProbDist p = make_dist({0.2, 0.5, 0.3});
    REQUIRE(p.probs() == std::vector<double>{0.5, 0.3, 0.2});
}

TEST_CASE("make_dist singleton") {
    const ProbDist p = make_dist({1.0});
    REQUIRE(p.size() == 1);
    REQUIRE(p[0] == 1.0);
}

TEST_CASE("make_dist rejects bad input") {
    REQUIRE_THROWS_AS(make_dist({0.4, 0.4}), SumError);  // strict mode, sum 0.8
    REQUIRE_THROWS_AS(make_dist({-0.1, 1.1}), ValidationError);
    REQUIRE_THROWS_AS(make_dist({}), ValidationError);
}

TEST_CASE("sum tolerance boundary") {
    REQUIRE_NOTHROW(make_dist({0.5, 0.5 - 4e-10}));         // inside 1e-9
    REQUIRE_THROWS_AS(make_dist({0.5, 0.5 - 2e-9}), SumError);
}

TEST_CASE("non-finite entries are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(make_dist({inf, 0.5}, true), ValidationError);
    REQUIRE_THROWS_AS(make_dist({nan, 0.5}), ValidationError);
}

TEST_CASE("make_dist normalize flag rescales") {
    const ProbDist p = make_dist({2.0, 1.0, 1.0}, true);
    REQUIRE(p[0] == Approx(0.5).margin(1e-15));
    REQUIRE(p[1] == Approx(0.25).margin(1e-15));
}

TEST_CASE("entropy worked values") {
    REQUIRE(entropy(make_dist({0.5, 0.5})) == Approx(1.0).margin(1e-15));
    REQUIRE(entropy(make_dist({1.0, 0.0})) == 0.0);
    // direct-summation oracle: -sum p log2 p
    REQUIRE(entropy(make_dist({0.4, 0.3, 0.2, 0.1})) ==
            Approx(1.8464393446710155).margin(1e-6));
}

TEST_CASE("entropy of uniform hits log2 n up to 2^20 atoms") {
    for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{1000},
                          std::size_t{1} << 12, std::size_t{1} << 16, std::size_t{1} << 20}) {
        const ProbDist u = make_dist(std::vector<double>(n, 1.0 / static_cast<double>(n)), true);
        REQUIRE(entropy(u) == Approx(std::log2(static_cast<double>(n))).margin(1e-12));
    }
}

TEST_CASE("kl_divergence worked values") {
    const ProbDist half = make_dist({0.5, 0.5});
    REQUIRE(kl_divergence(half, half) == 0.0);
    REQUIRE(kl_divergence(make_dist({1.0, 0.0}), half) == Approx(1.0).margin(1e-15));
    REQUIRE(kl_divergence(make_dist({0.9, 0.1}), half) ==
            Approx(0.5310044064107188).margin(1e-6));
}

TEST_CASE("kl_divergence support violation") {
    REQUIRE_THROWS_AS(kl_divergence(make_dist({0.5, 0.5}), make_dist({1.0, 0.0})),
                      SupportError);
}

TEST_CASE("entropy range and KL nonnegativity on random dists") {
    Rng rng(11);
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = rng.in_range(1, 40);
        const ProbDist p = rng.dist(n);
        const double h = entropy(p);
        REQUIRE(h >= -1e-12);
        REQUIRE(h <= std::log2(static_cast<double>(n)) + 1e-9);
        if (n > 1) {
            const ProbDist q = rng.dist(n);
            const double d = kl_divergence(q, p);
            REQUIRE(d >= -1e-12);
            // positive whenever the distributions actually differ
            double linf = 0.0;
            for (std::size_t i = 0; i < n; ++i) linf = std::max(linf, std::abs(q[i] - p[i]));
            if (linf > 1e-6) REQUIRE(d > 0.0);
        }
    }
}

TEST_CASE("entropy permutation-invariant at the make_dist boundary") {
    Rng rng(12);
    for (int c = 0; c < 50; ++c) {
        const std::size_t n = rng.in_range(2, 12);
        const ProbDist p = rng.dist(n);
        std::vector<double> shuffled = p.probs();
        for (std::size_t i = shuffled.size(); i-- > 1;) {
            std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
        }
        REQUIRE(entropy(make_dist(shuffled)) == Approx(entropy(p)).margin(1e-12));
    }
}

TEST_CASE("zero atoms are retained") {
    const ProbDist p = make_dist({0.5, 0.0, 0.5, 0.0});
    REQUIRE(p.size() == 4);
    REQUIRE(p.min_prob() == 0.0);
    REQUIRE(entropy(p) == Approx(1.0).margin(1e-15));
}
