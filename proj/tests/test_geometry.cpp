#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "numrange/geometry.hpp"

using namespace numrange;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("convex hull of a square with interior and collinear points") {
    std::vector<cplx> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5},
                             {0.5, 0.0}, {1.0, 0.5}, {0, 0}};
    std::vector<cplx> h = convex_hull(pts);
    REQUIRE(h.size() == 4);
    CHECK(polygon_area(h) == doctest::Approx(1.0));
    // CCW orientation
    for (size_t i = 0; i < h.size(); ++i)
        CHECK(cross(h[(i + 1) % 4] - h[i], h[(i + 2) % 4] - h[i]) > 0.0);
}

TEST_CASE("hull degenerate inputs pass through") {
    CHECK(convex_hull({}).empty());
    CHECK(convex_hull({{2, 3}}).size() == 1);
    CHECK(convex_hull({{0, 0}, {1, 1}, {0, 0}}).size() == 2);
    // all collinear
    std::vector<cplx> line = convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(line.size() == 2);
}

TEST_CASE("half plane clipping cuts a square to a triangle") {
    std::vector<cplx> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    // keep Re((1-i)/sqrt2 * z) <= 1/sqrt2, i.e. x + y <= 1
    std::vector<cplx> tri = clip_half_plane(sq, {pi / 4.0, 1.0 / std::sqrt(2.0)});
    CHECK(polygon_area(tri) == doctest::Approx(0.5));
    CHECK(polygon_contains(tri, {0.25, 0.25}, 1e-12));
    CHECK(!polygon_contains(tri, {0.9, 0.9}, 1e-12));
}

TEST_CASE("half plane intersection reproduces a regular polygon") {
    const int k = 6;
    std::vector<HalfPlane> hps;
    for (int i = 0; i < k; ++i) hps.push_back({2.0 * pi * i / k, 1.0});
    std::vector<cplx> hex = polygon_from_half_planes(hps, 10.0);
    REQUIRE(hex.size() == 6);
    // apothem 1, circumradius 1/cos(pi/6)
    const double R = 1.0 / std::cos(pi / 6.0);
    for (cplx v : hex) CHECK(std::abs(v) == doctest::Approx(R));
    CHECK(polygon_support(hex, 0.0) == doctest::Approx(1.0));
    CHECK(polygon_support(hex, pi / 6.0) == doctest::Approx(R));
}

TEST_CASE("empty intersection degenerates below 3 vertices") {
    std::vector<HalfPlane> hps = {{0.0, -1.0}, {pi, -1.0}}; // x <= -1 and x >= 1
    CHECK(polygon_from_half_planes(hps, 10.0).size() < 3);
}

TEST_CASE("distances") {
    CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(point_segment_distance({5, 0}, {-1, 0}, {1, 0}) == doctest::Approx(4.0));
    CHECK(point_segment_distance({2, 2}, {1, 1}, {1, 1}) == doctest::Approx(std::sqrt(2.0)));

    std::vector<cplx> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(distance_to_polygon({0.5, 0.5}, sq) == 0.0);
    CHECK(distance_to_polygon({2.0, 0.5}, sq) == doctest::Approx(1.0));
    CHECK(distance_to_polygon({0.5, 0.5}, {}) == std::numeric_limits<double>::infinity());

    // open vs closed polyline: distance to the gap edge differs
    std::vector<cplx> path = {{0, 0}, {1, 0}, {1, 1}};
    CHECK(point_polyline_distance({0, 1}, path, true) == doctest::Approx(std::sqrt(0.5)));
    CHECK(point_polyline_distance({0, 1}, path, false) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff distance between circles and points") {
    std::vector<cplx> c1 = sample_circle(0.0, 1.0, 512);
    std::vector<cplx> c2 = sample_circle(0.0, 1.5, 512);
    CHECK(hausdorff_distance(c1, c2, true) == doctest::Approx(0.5).epsilon(1e-3));
    std::vector<cplx> pt = {cplx(1.0, 0.0)};
    CHECK(hausdorff_distance(pt, pt, true) == 0.0);
    CHECK(hausdorff_distance(c1, pt, true) == doctest::Approx(2.0).epsilon(1e-3));
    // translation moves hausdorff by at most the shift
    std::vector<cplx> c3 = c1;
    for (cplx& z : c3) z += cplx(0.1, 0.0);
    CHECK(hausdorff_distance(c1, c3, true) <= 0.1 + 1e-12);
}

TEST_CASE("polygon support matches direct maximum over a dense sweep") {
    std::vector<cplx> tri = {{0, 0}, {1, 0}, {0, 1}};
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * pi * i / 64;
        double direct = -1e300;
        for (cplx v : tri) direct = std::max(direct, (std::polar(1.0, -th) * v).real());
        CHECK(polygon_support(tri, th) == doctest::Approx(direct));
    }
}
