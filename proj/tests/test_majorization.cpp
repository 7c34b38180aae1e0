#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "entagg/majorization.hpp"
#include "entagg/selftest.hpp"

using Catch::Approx;
using namespace entagg;

TEST_CASE("pad_to_common_length") {
    auto [a, b] = pad_to_common_length(make_dist({0.5, 0.5}), make_dist({1.0}));
    REQUIRE(a.probs() == std::vector<double>{0.5, 0.5});
    REQUIRE(b.probs() == std::vector<double>{1.0, 0.0});

    auto [c, d] = pad_to_common_length(make_dist({0.6, 0.4}), make_dist({0.5, 0.3, 0.2}));
    REQUIRE(c.probs() == std::vector<double>{0.6, 0.4, 0.0});
    REQUIRE(d.probs() == std::vector<double>{0.5, 0.3, 0.2});

    auto [e, f] = pad_to_common_length(make_dist({0.5, 0.5}), make_dist({0.7, 0.3}));
    REQUIRE(e.size() == 2);
    REQUIRE(f.size() == 2);
}

TEST_CASE("majorizes worked verdicts") {
    REQUIRE(majorizes(make_dist({0.5, 0.5}), make_dist({1.0, 0.0})).holds);

    const MajorizationVerdict v = majorizes(make_dist({1.0, 0.0}), make_dist({0.5, 0.5}));
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.first_violation_index == 1);

    // prefix sums: 0.4<=0.6, 0.7<=1.0, 0.9<=1.0, 1.0<=1.0
    REQUIRE(majorizes(make_dist({0.4, 0.3, 0.2, 0.1}), make_dist({0.6, 0.4})).holds);
}

TEST_CASE("verdict reports all prefix gaps") {
    const MajorizationVerdict v = majorizes(make_dist({0.4, 0.3, 0.2, 0.1}),
                                            make_dist({0.6, 0.4}));
    REQUIRE(v.prefix_gaps.size() == 4);
    REQUIRE(v.prefix_gaps[0] == Approx(0.2).margin(1e-12));
    REQUIRE(v.prefix_gaps[1] == Approx(0.3).margin(1e-12));
    REQUIRE(v.prefix_gaps[3] == Approx(0.0).margin(1e-12));
}

TEST_CASE("check_schur_gap worked values") {
    const ProbDist half = make_dist({0.5, 0.5});
    REQUIRE(check_schur_gap(half, half) == Approx(0.0).margin(1e-12));
    // H(a)=1, H(b)=0, D(b||a)=1
    REQUIRE(check_schur_gap(half, make_dist({1.0, 0.0})) == Approx(0.0).margin(1e-12));
    const double g = check_schur_gap(make_dist({0.4, 0.3, 0.3}), make_dist({0.5, 0.3, 0.2}));
    REQUIRE(g == Approx(0.0415037499278844).margin(1e-9));
    REQUIRE(g >= 0.0);
}

TEST_CASE("check_schur_gap rejects non-majorized pairs") {
    REQUIRE_THROWS_AS(check_schur_gap(make_dist({1.0, 0.0}), make_dist({0.5, 0.5})),
                      MajorizationError);
}

TEST_CASE("reflexivity, uniform minimality, transitivity") {
    Rng rng(21);
    for (int c = 0; c < 150; ++c) {
        const std::size_t n = rng.in_range(2, 20);
        const ProbDist p = rng.dist(n);
        REQUIRE(majorizes(p, p).holds);

        const ProbDist u = make_dist(std::vector<double>(n, 1.0 / static_cast<double>(n)), true);
        REQUIRE(majorizes(u, p).holds);

        if (n >= 4) {
            // p <= q <= s by construction: aggregate, then aggregate again
            const std::size_t m1 = rng.in_range(3, n - 1);
            const Aggregation q = rng.aggregation(p, m1);
            const std::size_t m2 = rng.in_range(2, m1 - 1);
            const Aggregation s = rng.aggregation(q.dist, m2);
            REQUIRE(majorizes(p, q.dist).holds);
            REQUIRE(majorizes(q.dist, s.dist).holds);
            REQUIRE(majorizes(p, s.dist).holds);
        }
    }
}

TEST_CASE("Schur concavity and its refinement on sampled pairs") {
    Rng rng(22);
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = rng.in_range(3, 20);
        const std::size_t m = rng.in_range(2, n - 1);
        const ProbDist p = rng.dist(n);
        const Aggregation q = rng.aggregation(p, m);
        REQUIRE(entropy(p) >= entropy(q.dist) - 1e-9);
        REQUIRE(check_schur_gap(p, q.dist) >= -1e-9);
    }
}

TEST_CASE("padding changes neither entropy nor verdicts") {
    Rng rng(23);
    for (int c = 0; c < 100; ++c) {
        const std::size_t n = rng.in_range(2, 12);
        const ProbDist a = rng.dist(n);
        const ProbDist b = rng.aggregation(a, rng.in_range(1, n)).dist;
        std::vector<double> av = a.probs();
        std::vector<double> bv = b.probs();
        av.resize(n + 3, 0.0);
        bv.resize(n + 3, 0.0);
        const ProbDist ap = make_dist(av);
        const ProbDist bp = make_dist(bv);
        REQUIRE(entropy(ap) == entropy(a));
        REQUIRE(majorizes(a, b).holds == majorizes(ap, bp).holds);
    }
}
