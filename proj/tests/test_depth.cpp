/**
 * @file test_depth.cpp
 * @brief Depth computations against closed forms and brute-force oracles.
 */

#include <doctest.h>

#include <hsdepth/depth.hpp>

using namespace hsdepth;

namespace {

std::vector<Vec2> random_cloud(Rng& rng, std::size_t n) {
    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    return pts;
}

}  // namespace

TEST_CASE("empirical 2-D sweep on canonical configurations") {
    std::vector<Vec2> sq = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    CHECK(hd_empirical_2d({0, 0}, sq).value == doctest::Approx(0.5));
    CHECK(hd_empirical_2d({1, 1}, sq).value == doctest::Approx(0.25));
    CHECK(hd_empirical_2d({3, 0}, sq).value == doctest::Approx(0.0));

    std::vector<Vec2> tri = {{0, 0}, {1, 0}, {0.5, 1}};
    CHECK(hd_empirical_2d({0, 0}, tri).value == doctest::Approx(1.0 / 3));
    CHECK(hd_empirical_2d({0.5, 0.3}, tri).value == doctest::Approx(1.0 / 3));

    // all atoms coincide with x
    std::vector<Vec2> one = {{2, 2}, {2, 2}};
    CHECK(hd_empirical_2d({2, 2}, one).value == doctest::Approx(1.0));
}

TEST_CASE("sweep equals brute force on random instances") {
    Rng rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 3 + rng.next_u64() % 48;
        auto pts = random_cloud(rng, n);
        const Vec2 x{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)};
        std::vector<VecD> ptsd;
        for (const Vec2& p : pts) ptsd.push_back(to_vecd(p));
        const double a = hd_empirical_2d(x, pts).value;
        const double b = hd_empirical_brute(to_vecd(x), ptsd).value;
        CHECK(a == b);  // exact rational equality k/n
    }
}

TEST_CASE("brute force in d = 1 and d = 3") {
    std::vector<VecD> pts1;
    for (double v : {0.0, 1.0, 2.0, 3.0}) {
        VecD p(1);
        p << v;
        pts1.push_back(p);
    }
    VecD x1(1);
    x1 << 1.0;
    CHECK(hd_empirical_brute(x1, pts1).value == doctest::Approx(0.5));

    // octahedron vertices in R^3: every generic halfspace through the
    // center keeps one atom of each antipodal pair
    std::vector<VecD> pts3;
    for (int s : {-1, 1})
        for (int k = 0; k < 3; ++k) {
            VecD p = VecD::Zero(3);
            p(k) = s;
            pts3.push_back(p);
        }
    CHECK(hd_empirical_brute(VecD::Zero(3), pts3).value ==
          doctest::Approx(0.5));

    // simplex vertices: interior points have depth exactly 1/(d+1)
    std::vector<VecD> simp = {VecD::Zero(3)};
    for (int k = 0; k < 3; ++k) {
        VecD p = VecD::Zero(3);
        p(k) = 1.0;
        simp.push_back(p);
    }
    VecD c(3);
    c << 0.25, 0.25, 0.25;
    CHECK(hd_empirical_brute(c, simp).value == doctest::Approx(0.25));
    VecD far = VecD::Zero(3);
    far(0) = 5.0;
    CHECK(hd_empirical_brute(far, pts3).value == doctest::Approx(0.0));
}

TEST_CASE("analytic depths: gaussian, ball, square, cauchy-marginal") {
    Measure g = Measure::standard_gaussian(2);
    CHECK(hd_analytic(VecD::Zero(2), g).value == doctest::Approx(0.5));
    CHECK(hd_analytic(to_vecd({1, 0}), g).value ==
          doctest::Approx(norm_cdf(-1.0)).epsilon(1e-12));

    Measure b = Measure::uniform_ball(2);
    CHECK(hd_analytic(VecD::Zero(2), b).value == doctest::Approx(0.5));
    const double r = 0.5;
    const double ref = 0.5 - (std::asin(r) + r * std::sqrt(1 - r * r)) / M_PI;
    CHECK(hd_analytic(to_vecd({r, 0}), b).value ==
          doctest::Approx(ref).epsilon(1e-9));
    CHECK(hd_analytic(to_vecd({2, 0}), b).value == doctest::Approx(0.0));

    Measure sq = Measure::unit_square();
    CHECK(hd_analytic(to_vecd({0.25, 0.5}), sq).value == doctest::Approx(0.25));
    CHECK(hd_analytic(to_vecd({0.25, 0.25}), sq).value ==
          doctest::Approx(0.125));
    CHECK(hd_analytic(to_vecd({1.5, 0.5}), sq).value == doctest::Approx(0.0));

    // 1-symmetric law with Cauchy marginals: HD((1,1)) = F1(-max|x_i|) = 1/4
    Measure c = Measure::alpha_symmetric(1.0, {MarginalCDF::Kind::Cauchy, 1},
                                         2);
    CHECK(hd_analytic(to_vecd({1, 1}), c).value ==
          doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("polygonal depth matches the square closed form") {
    Measure sq = Measure::unit_square();
    Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        const Vec2 x{rng.uniform(0, 1), rng.uniform(0, 1)};
        const double ref = 2.0 * std::min(x.x, 1 - x.x) * std::min(x.y, 1 - x.y);
        const double got = hd_polygonal(x, sq).value;
        CHECK(got == doctest::Approx(ref).epsilon(1e-7));
    }
}

TEST_CASE("polygonal depth on the two-square stack") {
    Measure t = Measure::uniform_polygonal(PolygonalRegion::uniform_union(
        {Polygon::rectangle(-1, 0, 1, 2), Polygon::rectangle(-2, -4, 2, 0)}));
    for (double e : {-0.5, 0.0, 0.3, 0.5}) {
        CHECK(hd_polygonal({e, 0}, t).value ==
              doctest::Approx(0.2).epsilon(1e-6));
    }
    // deep inside the big square the depth exceeds 1/5
    CHECK(hd_polygonal({0, -2}, t).value > 0.2 + 1e-3);
}

TEST_CASE("depth is affine invariant for empirical and polygonal laws") {
    Rng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        auto pts = random_cloud(rng, 30);
        const Vec2 x{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        // random non-singular affine map
        double a, b, c, d;
        do {
            a = rng.uniform(-2, 2);
            b = rng.uniform(-2, 2);
            c = rng.uniform(-2, 2);
            d = rng.uniform(-2, 2);
        } while (std::abs(a * d - b * c) < 0.1);
        const Vec2 t{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto T = [&](const Vec2& p) {
            return Vec2{a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y};
        };
        std::vector<Vec2> tp;
        for (const Vec2& p : pts) tp.push_back(T(p));
        CHECK(hd_empirical_2d(x, pts).value ==
              doctest::Approx(hd_empirical_2d(T(x), tp).value));
    }
}

TEST_CASE("mahalanobis depth and regions") {
    MatD I = MatD::Identity(2, 2);
    CHECK(mahalanobis_depth(VecD::Zero(2), VecD::Zero(2), I) ==
          doctest::Approx(1.0));
    CHECK(mahalanobis_depth(to_vecd({1, 0}), VecD::Zero(2), I) ==
          doctest::Approx(0.5));
    auto reg = mahalanobis_region(VecD::Zero(2), I, 0.5);
    CHECK(reg.radius == doctest::Approx(1.0));
    CHECK(reg.contains(to_vecd({0.99, 0})));
    CHECK(!reg.contains(to_vecd({1.01, 0})));
    auto tiny = mahalanobis_region(VecD::Zero(2), I, 1.0);
    CHECK(tiny.radius == doctest::Approx(0.0));
}

TEST_CASE("centroid body of centered square and disk") {
    Measure sq =
        Measure::uniform_polygon(Polygon::rectangle(-1, -1, 1, 1));
    CentroidBody2D z = centroid_body_2d(sq, {0, 0}, 256);
    // h((1,0)) = (1/4) * int |y1| dA = 1/2
    CHECK(support_function(z.polygon, {1, 0}) ==
          doctest::Approx(0.5).epsilon(1e-3));
    CHECK(support_function(z.polygon, {-1, 0}) ==
          doctest::Approx(0.5).epsilon(1e-3));

    Measure disk = Measure::uniform_polygon(Polygon::regular_ngon(512));
    CentroidBody2D zd = centroid_body_2d(disk, {0, 0}, 256);
    const double rref = 4.0 / (3.0 * M_PI);
    CHECK(support_function(zd.polygon, {1, 0}) ==
          doctest::Approx(rref).epsilon(1e-3));
    CHECK(zd.volume == doctest::Approx(M_PI * rref * rref).epsilon(1e-2));
}

TEST_CASE("oja depth: MC route agrees with the centroid-body identity") {
    Rng rng(31);
    std::vector<Measure> bodies;
    bodies.push_back(
        Measure::uniform_polygon(Polygon::regular_ngon(512)));  // disk
    bodies.push_back(
        Measure::uniform_polygon(Polygon::rectangle(-1, -1, 1, 1)));
    bodies.push_back(Measure::uniform_polygon(Polygon(
        {{1.3, 0}, {0.4, 1.1}, {-0.9, 0.7}, {-1.1, -0.5}, {0.3, -1.2}})));
    int which = 0;
    for (const Measure& m : bodies) {
        const Vec2 x{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
        const double exact = oja_via_centroid_body(m, x);
        const MCEstimate mc = oja_depth_mc(to_vecd(x), m, 100000,
                                           900 + static_cast<unsigned>(which));
        CHECK(std::abs(mc.value - exact) <= 3.0 * mc.std_error + 1e-4);
        ++which;
    }
    // disk at the center: closed-form E vol = 4/(9 pi), sqrt(det Sigma) = 1/4
    const double ref = 1.0 / (1.0 + 16.0 / (9.0 * M_PI));
    CHECK(oja_via_centroid_body(bodies[0], {0, 0}) ==
          doctest::Approx(ref).epsilon(1e-3));
}

TEST_CASE("max-depth classification") {
    Measure a = Measure::empirical2d({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    Measure b = Measure::empirical2d({{5, 5}, {6, 5}, {5, 6}, {6, 6}});
    CHECK(classify_max_depth(to_vecd({0.5, 0.5}), a, b) == DepthLabel::First);
    CHECK(classify_max_depth(to_vecd({5.5, 5.5}), a, b) == DepthLabel::Second);
    CHECK(classify_max_depth(to_vecd({100, 100}), a, b) ==
          DepthLabel::Unclassified);
    CHECK(classify_max_depth(to_vecd({0.5, 0.5}), b, a) == DepthLabel::Second);
}

TEST_CASE("depth dispatch covers 1-D variants") {
    Measure f = Measure::piecewise_uniform_1d(
        {{{-2.0, 0.0, 0.25}}, {{1.0, 5.0, 0.75}}});
    VecD x(1);
    x << 3.0;  // F(3) = 0.25 + 0.75*2/4 = 0.625, upper = 0.375
    CHECK(hd(x, f).value == doctest::Approx(0.375));
    x << -3.0;
    CHECK(hd(x, f).value == doctest::Approx(0.0));
}
