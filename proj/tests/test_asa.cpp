/**
 * @file test_asa.cpp
 * @brief Affine surface area: curvature integrals, floating-body limits,
 *        polytope flag asymptotics, L_p variants, isoperimetric and
 *        Santalo checks, log-concave extensions, and floating functions.
 */

#include <doctest.h>

#include <cmath>

#include "hsdepth/asa.hpp"

using namespace hsdepth;

namespace {

ConvexPotential1D gaussian_potential_1d(double sigma = 1.0) {
    const double s2 = sigma * sigma;
    const double c = 0.5 * std::log(2.0 * M_PI * s2);
    return {[=](double x) { return 0.5 * x * x / s2 + c; },
            [=](double x) { return x / s2; },
            [=](double) { return 1.0 / s2; }};
}

ConvexPotential2D gaussian_potential_2d() {
    const double c = std::log(2.0 * M_PI);
    return {[=](const Vec2& x) { return 0.5 * x.dot(x) + c; },
            [](const Vec2& x) { return x; },
            [](const Vec2&) { return Mat2Sym{1.0, 0.0, 1.0}; }};
}

// unnormalized quadratic potential r^2/2 (2-homogeneous gauge)
ConvexPotential2D quadratic_potential_2d() {
    return {[](const Vec2& x) { return 0.5 * x.dot(x); },
            [](const Vec2& x) { return x; },
            [](const Vec2&) { return Mat2Sym{1.0, 0.0, 1.0}; }};
}

}  // namespace

TEST_CASE("affine surface area of disks and ellipses") {
    CHECK(std::abs(affine_surface_area(SmoothBody2D::disk()) - 2.0 * M_PI) <
          1e-8);
    // as(ellipse) = 2 pi (ab)^{1/3}
    CHECK(std::abs(affine_surface_area(SmoothBody2D::ellipse(2.0, 1.0)) -
                   2.0 * M_PI * std::cbrt(2.0)) < 1e-6);
    CHECK(std::abs(affine_surface_area(SmoothBody2D::ellipse(3.0, 0.5)) -
                   2.0 * M_PI * std::cbrt(1.5)) < 1e-6);
    // polygons carry no affine surface area
    CHECK(affine_surface_area(Polygon::rectangle(0, 0, 1, 1)) == 0.0);
}

TEST_CASE("floating-body volume deficit recovers the affine surface area") {
    const std::vector<double> deltas{1e-4, 1e-5, 1e-6};
    const FloatingExtrapolation d =
        asa_via_floating(SmoothBody2D::disk(), deltas);
    const double target = M_PI * std::pow(1.5, 2.0 / 3.0);  // ~4.1169
    CHECK(std::abs(d.limit - target) < 0.02 * target);
    CHECK(std::abs(d.implied_asa - 2.0 * M_PI) < 0.02 * 2.0 * M_PI);

    const FloatingExtrapolation e = asa_via_floating(
        SmoothBody2D::ellipse(2.0, 1.0), deltas, 4096, 8192);
    CHECK(std::abs(e.implied_asa - 2.0 * M_PI * std::cbrt(2.0)) <
          0.03 * 2.0 * M_PI * std::cbrt(2.0));

    // a polytope: deficit per delta^{2/3} decays to zero
    const FloatingExtrapolation s =
        asa_via_floating(Polygon::rectangle(0, 0, 1, 1), deltas, 1024);
    CHECK(s.values.front() > s.values.back());
    CHECK(std::abs(s.limit) < 0.2);
}

TEST_CASE("polytope deficit follows the flag count") {
    const Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    const FlagAsymptotic fa =
        polytope_flag_asymptotic(sq, {1e-6}, 16384);
    CHECK(fa.flags == 8);
    CHECK(fa.predicted_limit == doctest::Approx(2.0));
    // exact corner loss: 4 corners each delta(1 - log(2 delta))/2... total
    // deficit 2 delta (1 - log(2 delta)); ratio at delta = 1e-6 is 2.0444
    const double delta = 1e-6;
    const double exact =
        2.0 * delta * (1.0 - std::log(2.0 * delta)) / (delta * std::log(1.0 / delta));
    CHECK(std::abs(fa.ratios[0] - exact) < 0.02);
    CHECK(std::abs(exact - 2.0444) < 1e-3);

    // the ratio trends toward the flag prediction as delta decreases
    const FlagAsymptotic trend =
        polytope_flag_asymptotic(sq, {1e-3, 1e-5, 1e-7}, 4096);
    CHECK(trend.ratios[0] > trend.ratios[1]);
    CHECK(trend.ratios[1] > trend.ratios[2]);
    CHECK(trend.ratios[2] > trend.predicted_limit - 0.05);
}

TEST_CASE("L_p affine surface areas on the disk") {
    const SmoothBody2D disk = SmoothBody2D::disk();
    // every p gives 2 pi on the unit disk (kappa = <x,N> = 1)
    for (double p : {0.0, 0.5, 1.0, 2.0, 10.0})
        CHECK(std::abs(lp_affine_surface_area(disk, p) - 2.0 * M_PI) < 1e-8);
    // p = 0 is twice the area, p = infinity twice the polar area
    const SmoothBody2D ell = SmoothBody2D::ellipse(2.0, 1.0);
    CHECK(std::abs(lp_affine_surface_area(ell, 0.0) - 2.0 * ell.area()) <
          1e-7);
    const double inf = std::numeric_limits<double>::infinity();
    // polar of ellipse(2,1) is ellipse(1/2,1): area pi/2
    CHECK(std::abs(lp_affine_surface_area(ell, inf) - 2.0 * (M_PI / 2.0)) <
          1e-7);
    CHECK_THROWS_AS(lp_affine_surface_area(disk, -2.0),
                    std::invalid_argument);
}

TEST_CASE("affine isoperimetric margin") {
    // ellipses sit exactly on the bound
    CHECK(std::abs(affine_isoperimetric_margin(SmoothBody2D::disk())) < 1e-6);
    CHECK(std::abs(affine_isoperimetric_margin(
              SmoothBody2D::ellipse(2.0, 0.5))) < 1e-6);
    CHECK(std::abs(affine_isoperimetric_margin(
              SmoothBody2D::ellipse(3.0, 1.0))) < 1e-6);
    // perturbed disks lose affine surface area
    CHECK(affine_isoperimetric_margin(
              SmoothBody2D::perturbed_disk(0.05, 3)) > 1e-5);
    CHECK(affine_isoperimetric_margin(
              SmoothBody2D::perturbed_disk(0.02, 5)) > 1e-6);
}

TEST_CASE("volume product is maximized by ellipsoids") {
    // centered square [-1,1]^2: vol 4, polar vol 2, product 8 < pi^2
    const SantaloResult sq =
        blaschke_santalo_check(Polygon::rectangle(-1, -1, 1, 1));
    CHECK(std::abs(sq.product - 8.0) < 1e-4);
    CHECK(sq.margin > 0.0);
    CHECK(sq.santalo_point.norm() < 1e-3);
    // shifted copy: the Santalo point follows the body
    const SantaloResult sh =
        blaschke_santalo_check(Polygon::rectangle(2, 3, 4, 5));
    CHECK(std::abs(sh.product - 8.0) < 1e-4);
    CHECK((sh.santalo_point - Vec2{3.0, 4.0}).norm() < 1e-3);
    // fine disk approximation: product just under pi^2
    const SantaloResult dk =
        blaschke_santalo_check(Polygon::regular_ngon(256));
    CHECK(dk.product < M_PI * M_PI);
    CHECK(dk.margin < 0.01);
}

TEST_CASE("generalized curvature probe on smooth bodies") {
    const std::vector<double> deltas{1e-3, 1e-4, 1e-5};
    CHECK(std::abs(generalized_curvature_probe(SmoothBody2D::disk(), 0.13,
                                               deltas) -
                   1.0) < 1e-3);
    // ellipse(2,1) at t = 0 (the point (2,0)): kappa = a/b^2... = 2
    CHECK(std::abs(generalized_curvature_probe(
              SmoothBody2D::ellipse(2.0, 1.0), 0.0, deltas) - 2.0) < 5e-3);
    // and at the top (0,1): kappa = b/a^2 = 1/4
    CHECK(std::abs(generalized_curvature_probe(
              SmoothBody2D::ellipse(2.0, 1.0), 0.25, deltas) - 0.25) < 2e-3);
}

TEST_CASE("generalized curvature exists where the second derivative fails") {
    const std::vector<double> deltas{1e-3, 1e-4, 1e-5};
    // parabola profile x^2: curvature 2 at the apex
    CHECK(std::abs(generalized_curvature_probe_profile(
              [](double x) { return x * x; }, -1.0, 1.0, deltas) - 2.0) <
          1e-2);
    // sawtooth interpolation of the parabola: not twice differentiable at
    // 0, generalized curvature still 2
    CHECK(std::abs(sawtooth_parabola_profile(0.5) - 0.5 * 0.5) < 1e-12);
    CHECK(std::abs(sawtooth_parabola_profile(1.0 / 3.0) - 1.0 / 9.0) < 1e-12);
    CHECK(sawtooth_parabola_profile(0.29) > 0.29 * 0.29);
    CHECK(std::abs(generalized_curvature_probe_profile(
              sawtooth_parabola_profile, -1.0, 1.0, deltas) - 2.0) < 5e-2);
}

TEST_CASE("affine surface area of log-concave measures") {
    // standard gaussians have affine surface area one in every dimension
    CHECK(std::abs(asa_logconcave(gaussian_potential_1d()) - 1.0) < 1e-6);
    CHECK(std::abs(asa_logconcave(gaussian_potential_2d()) - 1.0) < 1e-6);
    // scaling: sigma^{-2/3} in one dimension
    CHECK(std::abs(asa_logconcave(gaussian_potential_1d(2.0)) -
                   std::pow(2.0, -2.0 / 3.0)) < 1e-6);
}

TEST_CASE("lambda family interpolates mass and affine surface area") {
    const ConvexPotential2D g = gaussian_potential_2d();
    CHECK(std::abs(lambda_asa(g, 0.0) - 1.0) < 1e-6);
    // the normalized gaussian is r^2/2 + c: the gauge term contributes
    // e^{2 c lambda}, so lambda = 1/(d+2) gives e^{c/2} * asa = sqrt(2 pi)
    CHECK(std::abs(lambda_asa(g, 0.25) - std::sqrt(2.0 * M_PI)) < 1e-6);
    const ConvexPotential1D g1 = gaussian_potential_1d();
    CHECK(std::abs(lambda_asa(g1, 0.0) - 1.0) < 1e-6);
    // 2-homogeneous potentials: lambda = 1/(d+2) matches asa_logconcave
    const ConvexPotential1D q1{[](double x) { return 0.5 * x * x; },
                               [](double x) { return x; },
                               [](double) { return 1.0; }};
    CHECK(std::abs(lambda_asa(q1, 1.0 / 3.0) - asa_logconcave(q1)) < 1e-6);
    CHECK(std::abs(asa_logconcave(q1) - std::sqrt(2.0 * M_PI)) < 1e-6);
    const ConvexPotential2D q2 = quadratic_potential_2d();
    CHECK(std::abs(lambda_asa(q2, 0.25) - asa_logconcave(q2)) < 1e-6);
    // gauge match: for psi = r^2/2 and lambda = p/(2+p) with p = 1 the
    // functional equals (2 pi)^{d/2} / (d vol B) times as_1 of the ball
    const double lhs = lambda_asa(quadratic_potential_2d(), 1.0 / 3.0);
    const double rhs = (2.0 * M_PI) / (2.0 * M_PI) *
                       lp_affine_surface_area(SmoothBody2D::disk(), 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-5);
}

TEST_CASE("floating functions of convex potentials") {
    // affine potentials float to themselves away from the window edges
    const ConvexPotential1D aff{[](double x) { return 0.5 * x + 1.0; },
                                [](double) { return 0.5; },
                                [](double) { return 0.0; }};
    const FloatingFunction1D fa =
        floating_function_1d(aff, 0.01, -4.0, 4.0, 128);
    for (double x : {-2.0, 0.0, 1.5})
        CHECK(std::abs(fa.eval(x) - aff.psi(x)) < 1e-6);

    // monotone in delta and above the base
    const ConvexPotential1D g = gaussian_potential_1d();
    const FloatingFunction1D f1 = floating_function_1d(g, 0.01, -8.0, 8.0, 256);
    const FloatingFunction1D f2 = floating_function_1d(g, 0.05, -8.0, 8.0, 256);
    for (int i = -30; i <= 30; ++i) {
        const double x = i * 0.1;
        CHECK(f1.eval(x) >= g.psi(x) - 1e-12);
        CHECK(f2.eval(x) >= f1.eval(x) - 1e-9);
    }

    // mass deficit scales like delta^{2/3} with the universal constant
    const double delta = 1e-4;
    const FloatingFunction1D fd =
        floating_function_1d(g, delta, -8.0, 8.0, 2048);
    const double mass = integrate(
        [&](double x) { return std::exp(-g.psi(x)); }, -8.0, 8.0, 1e-10);
    const double floated = integrate(
        [&](double x) { return std::exp(-fd.eval(x)); }, -8.0, 8.0, 1e-10);
    const double ratio = (mass - floated) / std::pow(delta, 2.0 / 3.0);
    const double target = 0.5 * std::pow(1.5, 2.0 / 3.0);
    CHECK(std::abs(ratio - target) < 0.05 * target);
}

TEST_CASE("affine covariance of the curvature integral") {
    // as(T K) = |det T|^{1/3} as(K) on axis scalings of the disk
    const double as_disk = affine_surface_area(SmoothBody2D::disk());
    for (double a : {1.5, 2.0, 4.0}) {
        const double as = affine_surface_area(SmoothBody2D::ellipse(a, 1.0));
        CHECK(std::abs(as - std::cbrt(a) * as_disk) < 1e-6);
    }
    // non-convex curves are rejected
    CHECK_THROWS_AS(affine_surface_area(SmoothBody2D::perturbed_disk(0.5, 7)),
                    std::domain_error);
}

TEST_CASE("L_p isoperimetric comparison") {
    // as_p(K) / as_p(B) <= (vol K / vol B)^{(2-p)/(2+p)} for p in (0, 2)
    for (double p : {0.5, 1.0, 2.0}) {
        const double ref = 2.0 * M_PI;
        for (double amp : {0.02, 0.04}) {
            const SmoothBody2D body = SmoothBody2D::perturbed_disk(amp, 4);
            const double lhs = lp_affine_surface_area(body, p) / ref;
            const double rhs =
                std::pow(body.area() / M_PI, (2.0 - p) / (2.0 + p));
            CHECK(lhs <= rhs + 1e-9);
        }
        CHECK(std::abs(lp_affine_surface_area(SmoothBody2D::disk(), p) / ref -
                       1.0) < 1e-8);
    }
}
