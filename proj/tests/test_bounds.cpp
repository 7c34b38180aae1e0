#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "entagg/bounds.hpp"
#include "entagg/majorization.hpp"
#include "entagg/selftest.hpp"

using Catch::Approx;
using namespace entagg;

namespace {

// the prior work's ratio function; its inverse is (y+1)^2/(4y)
double prior_g(double x) {
    return 1.0 + 2.0 * (x - 1.0) + 2.0 * std::sqrt(x * x - x);
}

} // namespace

TEST_CASE("theorem2_gap worked values") {
    REQUIRE(theorem2_gap(1.0) == 0.0);
    REQUIRE(theorem2_gap(2.0) == Approx(0.0860713).margin(1e-6));
    REQUIRE(std::abs(theorem2_gap(2.0) - alpha_constant()) <= 1e-12);
    REQUIRE(theorem2_gap(4.0) == Approx(0.337699).margin(1e-5));
    REQUIRE_THROWS_AS(theorem2_gap(0.5), ParamError);
}

TEST_CASE("theorem2_lower_bound worked values") {
    REQUIRE(theorem2_lower_bound(2, 1.0) == Approx(1.0).margin(1e-15));
    REQUIRE(theorem2_lower_bound(2, 2.0) == Approx(0.913929).margin(1e-5));
    REQUIRE(theorem2_lower_bound(1, 7.0) == 0.0);
    REQUIRE_THROWS_AS(theorem2_lower_bound(0, 2.0), ParamError);
    REQUIRE_THROWS_AS(theorem2_lower_bound(4, 0.0), ParamError);
}

TEST_CASE("prior_bound_gap worked values") {
    REQUIRE(prior_bound_gap(1.0) == 0.0);  // (2)^2/4 = 1
    REQUIRE(prior_bound_gap(2.0) == Approx(0.117783).margin(1e-5));   // ln(9/8)
    REQUIRE(prior_bound_gap(9.0) == Approx(1.021651).margin(1e-5));   // ln(100/36)
    REQUIRE_THROWS_AS(prior_bound_gap(0.9), ParamError);
}

TEST_CASE("prior bound inverse identity") {
    for (double rho : {1.0, 1.5, 2.0, 5.0, 40.0}) {
        const double y = (rho + 1.0) * (rho + 1.0) / (4.0 * rho);
        REQUIRE(prior_g(y) == Approx(rho).epsilon(1e-12));
    }
}

TEST_CASE("build_z_rho worked values") {
    const ZRhoDist z = build_z_rho(make_dist({0.35, 0.35, 0.2, 0.1}), 4.0);
    REQUIRE(z.i == 2);  // floor(0.6/0.3)
    REQUIRE(z.dist[0] == Approx(0.4).margin(1e-12));
    REQUIRE(z.dist[1] == Approx(0.4).margin(1e-12));
    REQUIRE(z.dist[2] == Approx(0.1).margin(1e-12));
    REQUIRE(z.dist[3] == Approx(0.1).margin(1e-12));

    const ProbDist u = make_dist(std::vector<double>(5, 0.2));
    const ZRhoDist zu = build_z_rho(u, 3.0);
    REQUIRE(zu.i == 0);
    for (std::size_t j = 0; j < 5; ++j) REQUIRE(zu.dist[j] == Approx(0.2).margin(1e-12));

    const ZRhoDist z2 = build_z_rho(make_dist({0.5, 0.25, 0.25}), 2.0);
    REQUIRE(z2.i == 1);  // floor(0.25/0.25)
    REQUIRE(z2.dist[0] == Approx(0.5).margin(1e-12));
    REQUIRE(z2.dist[1] == Approx(0.25).margin(1e-12));
    REQUIRE(z2.dist[2] == Approx(0.25).margin(1e-12));
}

TEST_CASE("build_z_rho rejects bad input") {
    REQUIRE_THROWS_AS(build_z_rho(make_dist({0.8, 0.2}), 2.0), RatioError);
    REQUIRE_THROWS_AS(build_z_rho(make_dist({0.5, 0.5, 0.0}), 2.0), SupportError);
    REQUIRE_THROWS_AS(build_z_rho(make_dist({0.5, 0.5}), 1.0), ParamError);
}

TEST_CASE("bound_report identities") {
    const BoundReport rep = bound_report(2, 1.0);
    REQUIRE(rep.theorem2_bound == Approx(1.0).margin(1e-15));
    const BoundReport rep2 = bound_report(16, 3.0);
    REQUIRE(rep2.theorem2_bound == Approx(4.0 - rep2.gap_theorem2).margin(1e-12));
    REQUIRE(rep2.prior_bound == Approx(4.0 - rep2.gap_prior).margin(1e-12));
    REQUIRE(rep2.gap_theorem2 >= 0.0);
}

TEST_CASE("bound_comparison_table rows") {
    const std::vector<BoundRow> rows = bound_comparison_table({1.0, 2.0});
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].gap_theorem2 == 0.0);
    REQUIRE(rows[0].gap_prior == 0.0);
    REQUIRE(rows[0].log2_rho == 0.0);
    REQUIRE(rows[1].gap_theorem2 == Approx(0.086071).margin(1e-5));
    REQUIRE(rows[1].gap_prior == Approx(0.117783).margin(1e-5));
    REQUIRE(rows[1].log2_rho == Approx(1.0).margin(1e-15));
    REQUIRE_THROWS_AS(bound_comparison_table({0.8}), ParamError);
}

TEST_CASE("ratio bound validity and extremality on sampled distributions") {
    Rng rng(41);
    const double rhos[] = {1.5, 2.0, 4.0, 10.0};
    for (int c = 0; c < 400; ++c) {
        const double rho = rhos[c % 4];
        const std::size_t n = rng.in_range(2, 48);
        const ProbDist p = rng.ratio_dist(n, rho);
        const ZRhoDist z = build_z_rho(p, rho);

        REQUIRE(entropy(p) >= entropy(z.dist) - 1e-9);
        REQUIRE(entropy(z.dist) >= theorem2_lower_bound(n, rho) - 1e-9);
        REQUIRE(majorizes(p, z.dist).holds);
        REQUIRE(z.middle >= p.min_prob() - 1e-12);
        REQUIRE(z.middle < rho * p.min_prob() + 1e-12);
    }
}

TEST_CASE("dominance over the prior bound and over log2(rho)") {
    for (int s = 0; s <= 500; ++s) {
        const double rho = 1.0 + (100.0 - 1.0) * s / 500.0;
        const double gap = theorem2_gap(rho);
        REQUIRE(gap <= prior_bound_gap(rho) + 1e-12);
        REQUIRE(gap <= std::log2(rho) + 1e-12);
    }
}
