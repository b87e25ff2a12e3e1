/**
 * @file test_geom.cpp
 * @brief Geometry kernel tests: clipping, hulls, metrics, cut profiles.
 */

#include <doctest.h>

#include <hsdepth/geom.hpp>
#include <hsdepth/numeric.hpp>

using namespace hsdepth;

TEST_CASE("polygon basics") {
    Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    CHECK(sq.area() == doctest::Approx(1.0));
    CHECK(sq.centroid().x == doctest::Approx(0.5));
    CHECK(sq.centroid().y == doctest::Approx(0.5));
    CHECK(sq.perimeter() == doctest::Approx(4.0));
    CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)));
    CHECK(sq.is_convex());
    CHECK(sq.contains({0.5, 0.5}));
    CHECK(sq.contains({1.0, 1.0}));  // boundary inclusive
    CHECK(!sq.contains({1.1, 0.5}));

    // CW input is normalized to CCW
    Polygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(cw.area() == doctest::Approx(1.0));

    Polygon hex = Polygon::regular_ngon(6, 2.0);
    CHECK(hex.area() == doctest::Approx(6.0 * std::sqrt(3.0) / 4.0 * 4.0));
}

TEST_CASE("halfplane clip: complement areas sum to total") {
    Rng rng(7);
    Polygon hex = Polygon::regular_ngon(7, 1.3, {0.2, -0.4});
    for (int i = 0; i < 50; ++i) {
        Halfplane h(dir(rng.uniform(0, 2 * M_PI)), rng.uniform(-1, 1));
        Halfplane hc(-h.normal, -h.offset);
        const double a = clip_halfplane(hex, h).area();
        const double b = clip_halfplane(hex, hc).area();
        CHECK(a + b == doctest::Approx(hex.area()).epsilon(1e-10));
        Polygon cut = clip_halfplane(hex, h);
        for (const Vec2& v : cut.vertices()) CHECK(h.signed_dist(v) <= 1e-9);
    }
}

TEST_CASE("halfplane intersection reconstructs a square") {
    std::vector<Halfplane> hs = {
        {{1, 0}, 1.0}, {{-1, 0}, 0.0}, {{0, 1}, 2.0}, {{0, -1}, 1.0}};
    auto r = intersect_halfplanes(hs, 10.0);
    REQUIRE(r.kind == HalfplaneIntersection::Kind::Bounded);
    CHECK(r.polygon.area() == doctest::Approx(3.0));
    CHECK(hausdorff(r.polygon, Polygon::rectangle(0, -1, 1, 2)) ==
          doctest::Approx(0.0).epsilon(1e-7));

    // infeasible constraints give the empty set
    std::vector<Halfplane> bad = {{{1, 0}, -1.0}, {{-1, 0}, -1.0}};
    CHECK(intersect_halfplanes(bad).kind == HalfplaneIntersection::Kind::Empty);
}

TEST_CASE("convex hull removes interior and collinear points") {
    std::vector<Vec2> pts = {{0, 0}, {2, 0}, {2, 2}, {0, 2},
                             {1, 1}, {1, 0}, {2, 1}};
    Polygon h = convex_hull(pts);
    CHECK(h.size() == 4);
    CHECK(h.area() == doctest::Approx(4.0));
}

TEST_CASE("chord barycenter of a square cut") {
    Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    Vec2 b = chord_barycenter(sq, Halfplane({1, 0}, 0.3));
    CHECK(b.x == doctest::Approx(0.3));
    CHECK(b.y == doctest::Approx(0.5));
}

TEST_CASE("hausdorff and symmetric difference of shifted squares") {
    Polygon a = Polygon::rectangle(0, 0, 1, 1);
    Polygon b = a.translated({0.25, 0.0});
    CHECK(hausdorff(a, b) == doctest::Approx(0.25));
    CHECK(symdiff_area(a, b) == doctest::Approx(0.5));
    // triangle inequality
    Polygon c = a.translated({0.5, 0.1});
    CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12);
}

TEST_CASE("support function and polar body") {
    Polygon sq = Polygon::rectangle(-1, -1, 1, 1);
    CHECK(support_function(sq, {1, 0}) == doctest::Approx(1.0));
    CHECK(support_function(sq, unit({1, 1})) == doctest::Approx(std::sqrt(2.0)));

    // polar of [-1,1]^2 is the cross-polytope with vertices (+-1, 0), (0, +-1)
    Polygon polar = polar_body(sq);
    CHECK(polar.area() == doctest::Approx(2.0));
    // involution: polar of the polar recovers the square
    CHECK(hausdorff(polar_body(polar), sq) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("polygon covariance: exact rectangle moments") {
    Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    Mat2Sym c = polygon_covariance(sq);
    CHECK(c.xx == doctest::Approx(1.0 / 12.0));
    CHECK(c.yy == doctest::Approx(1.0 / 12.0));
    CHECK(c.xy == doctest::Approx(0.0));

    Polygon rect = Polygon::rectangle(-2, 1, 4, 2);
    Mat2Sym cr = polygon_covariance(rect);
    CHECK(cr.xx == doctest::Approx(36.0 / 12.0));
    CHECK(cr.yy == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("cut profile matches clipping and inverts exactly") {
    Rng rng(11);
    Polygon hep = Polygon::regular_ngon(9, 1.7, {0.3, 0.2});
    for (int k = 0; k < 8; ++k) {
        Vec2 u = dir(rng.uniform(0, 2 * M_PI));
        CutProfile cp(hep, u);
        CHECK(cp.total_area() == doctest::Approx(hep.area()).epsilon(1e-12));
        for (int i = 0; i < 20; ++i) {
            const double t = rng.uniform(cp.t_min() - 0.2, cp.t_max() + 0.2);
            const double ref = clip_halfplane(hep, Halfplane(u, t)).area();
            CHECK(cp.area_below(t) == doctest::Approx(ref).epsilon(1e-9));
        }
        for (int i = 0; i < 20; ++i) {
            const double target = rng.uniform(0.0, cp.total_area());
            const double t = cp.offset_for_area(target);
            CHECK(cp.area_below(t) == doctest::Approx(target).epsilon(1e-9));
        }
    }
}

TEST_CASE("distance to polygon") {
    Polygon sq = Polygon::rectangle(0, 0, 1, 1);
    CHECK(distance_to_polygon(sq, {0.5, 0.5}) == doctest::Approx(0.0));
    CHECK(distance_to_polygon(sq, {2.0, 0.5}) == doctest::Approx(1.0));
    CHECK(distance_to_polygon(sq, {2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("convex intersection") {
    Polygon a = Polygon::rectangle(0, 0, 2, 1);
    Polygon b = Polygon::rectangle(1, -1, 3, 2);
    CHECK(convex_intersection(a, b).area() == doctest::Approx(1.0));
}
