/**
 * @file test_approx.cpp
 * @brief Greedy floating-body approximation, random polytope deficits,
 *        boundary sampling densities, and the hull-vs-floating-body law of
 *        large numbers.
 */

#include <doctest.h>

#include <cmath>

#include "hsdepth/approx.hpp"
#include "hsdepth/regions.hpp"

using namespace hsdepth;

TEST_CASE("greedy floating-body approximation of the square") {
    const Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    const FloatingApprox fa = floating_body_algorithm(sq, 1e-3);
    CHECK(fa.containment_verified);
    // for a polytope the support points are corners: P_N recovers K
    CHECK(fa.vertices.size() == 4);
    CHECK(std::abs(fa.polygon.area() - 1.0) < 1e-12);
    for (const Vec2& v : fa.polygon.vertices()) CHECK(sq.contains(v, 1e-9));

    // delta at the admissible maximum: containment still holds
    const double dmax = 1.0 / (4.0 * std::exp(4.0));
    const FloatingApprox coarse = floating_body_algorithm(sq, dmax);
    CHECK(coarse.containment_verified);
    CHECK(coarse.vertices.size() <= fa.vertices.size());

    CHECK_THROWS_AS(floating_body_algorithm(sq, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(floating_body_algorithm(sq, 0.2), std::invalid_argument);
}

TEST_CASE("greedy deficit scales like the inverse square vertex count") {
    const Polygon disk = Polygon::regular_ngon(4096);
    const double A = disk.area();
    std::vector<double> ns, deficits;
    for (double d : {1e-3, 2.5e-4, 6.25e-5}) {
        const FloatingApprox fa = floating_body_algorithm(disk, d);
        CHECK(fa.containment_verified);
        ns.push_back(static_cast<double>(fa.vertices.size()));
        deficits.push_back(A - fa.polygon.area());
    }
    CHECK(ns[0] < ns[1]);
    CHECK(ns[1] < ns[2]);
    // deficit * N^2 stable within 25% while N roughly doubles
    const double c0 = deficits[0] * ns[0] * ns[0];
    const double c2 = deficits[2] * ns[2] * ns[2];
    CHECK(c2 / c0 > 0.75);
    CHECK(c2 / c0 < 1.0 / 0.75);
}

TEST_CASE("random interior polytopes: smooth versus polytope deficits") {
    const Polygon disk = Polygon::regular_ngon(4096);
    std::vector<double> ns, means;
    for (int n : {32, 128, 512, 2048}) {
        const ApproxRun run = random_polytope_deficit(disk, n, 200, 7);
        CHECK(run.deficit_mean > 0.0);
        CHECK(run.deficit_se < run.deficit_mean);
        ns.push_back(n);
        means.push_back(run.deficit_mean);
    }
    // vol K - E(K, N) decays like N^{-2/3} for smooth bodies
    const double slope = log_log_slope(ns, means);
    CHECK(std::abs(slope - (-2.0 / 3.0)) < 0.1);
    CHECK(mann_kendall_decreasing(means));

    // deficit comparable to the floating-body deficit at delta = 1/N
    const Measure m = Measure::uniform_polygon(disk);
    const double A = disk.area();
    double rmin = 1e300, rmax = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const DepthRegion fb = convex_floating_body(m, 1.0 / ns[i], 1024);
        const double fdef = A - fb.outer.area();
        const double r = means[i] / fdef;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    CHECK(rmax / rmin < 3.0);

    // polytopes pick up a logarithmic factor: deficit * N / log N stable
    const Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    std::vector<double> ratios;
    for (int n : {64, 256, 1024}) {
        const ApproxRun run = random_polytope_deficit(sq, n, 200, 11);
        ratios.push_back(run.deficit_mean * n / std::log(n));
    }
    const double mid = ratios[1];
    for (double r : ratios) {
        CHECK(r > 0.7 * mid);
        CHECK(r < 1.3 * mid);
    }

    CHECK_THROWS_AS(random_polytope_deficit(disk, 2, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("boundary sampling: affine surface area density wins") {
    const SmoothBody2D disk = SmoothBody2D::disk();
    // constant curvature: both densities agree in distribution
    const ApproxRun u = random_boundary_polytope(
        disk, BoundaryDensity::Uniform, 64, 300, 3);
    const ApproxRun f = random_boundary_polytope(
        disk, BoundaryDensity::AffineSurface, 64, 300, 3);
    CHECK(std::abs(u.deficit_mean - f.deficit_mean) <
          3.0 * (u.deficit_se + f.deficit_se));

    // eccentric ellipse: the kappa^{1/3} density beats arclength at 2 sigma
    const SmoothBody2D ell = SmoothBody2D::ellipse(3.0, 1.0);
    const ApproxRun eu = random_boundary_polytope(
        ell, BoundaryDensity::Uniform, 256, 500, 5);
    const ApproxRun ef = random_boundary_polytope(
        ell, BoundaryDensity::AffineSurface, 256, 500, 5);
    const double sigma =
        std::sqrt(eu.deficit_se * eu.deficit_se + ef.deficit_se * ef.deficit_se);
    CHECK(ef.deficit_mean + 2.0 * sigma < eu.deficit_mean);

    // boundary deficits decay like N^{-2}
    std::vector<double> ns, means;
    for (int n : {32, 64, 128, 256, 512}) {
        const ApproxRun run = random_boundary_polytope(
            ell, BoundaryDensity::AffineSurface, n, 300, 9);
        ns.push_back(n);
        means.push_back(run.deficit_mean);
    }
    CHECK(std::abs(log_log_slope(ns, means) - (-2.0)) < 0.15);

    CHECK_THROWS_AS(
        random_boundary_polytope(SmoothBody2D::perturbed_disk(0.5, 7),
                                 BoundaryDensity::Uniform, 32, 5, 1),
        std::domain_error);
}

TEST_CASE("convex hulls of gaussian samples chase the floating body") {
    const Measure g = Measure::standard_gaussian(2);
    const std::vector<int> ns{100, 1000, 10000};
    int decreasing = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::vector<GnedenkoRow> rows = gnedenko_experiment(g, ns, seed);
        REQUIRE(rows.size() == 3);
        for (const GnedenkoRow& r : rows) {
            CHECK(r.hausdorff_dist >= 0.0);
            CHECK(r.max_overshoot >= 0.0);
        }
        if (rows[0].hausdorff_dist > rows[1].hausdorff_dist &&
            rows[1].hausdorff_dist > rows[2].hausdorff_dist)
            ++decreasing;
    }
    CHECK(decreasing >= 18);

    CHECK_THROWS_AS(gnedenko_experiment(Measure::unit_square(), ns, 1),
                    std::invalid_argument);
}

TEST_CASE("trend and slope utilities") {
    CHECK(mann_kendall_decreasing({9, 8, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(!mann_kendall_decreasing({1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(!mann_kendall_decreasing({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(std::abs(log_log_slope({1, 2, 4, 8}, {1, 0.25, 0.0625, 0.015625}) -
                   (-2.0)) < 1e-12);
    CHECK_THROWS_AS(log_log_slope({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("monte carlo runs are deterministic per seed") {
    const Polygon disk = Polygon::regular_ngon(512);
    const ApproxRun a = random_polytope_deficit(disk, 128, 50, 42);
    const ApproxRun b = random_polytope_deficit(disk, 128, 50, 42);
    CHECK(a.deficit_mean == b.deficit_mean);
    CHECK(a.deficit_se == b.deficit_se);
    const ApproxRun c = random_polytope_deficit(disk, 128, 50, 43);
    CHECK(a.deficit_mean != c.deficit_mean);

    const SmoothBody2D e = SmoothBody2D::ellipse(2.0, 1.0);
    const ApproxRun d1 = random_boundary_polytope(
        e, BoundaryDensity::AffineSurface, 64, 50, 7);
    const ApproxRun d2 = random_boundary_polytope(
        e, BoundaryDensity::AffineSurface, 64, 50, 7);
    CHECK(d1.deficit_mean == d2.deficit_mean);
}
