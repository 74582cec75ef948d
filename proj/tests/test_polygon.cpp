#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pentagram/polygon.hpp"

using namespace pentagram;

namespace {

constexpr double kPi = std::numbers::pi;

AffinePolygon regular_ngon(int n, double radius = 1.0, double rot = 0.0,
                           Vec2 center = Vec2::Zero()) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
        const double a = rot + 2.0 * kPi * i / n;
        pts.emplace_back(center.x() + radius * std::cos(a), center.y() + radius * std::sin(a));
    }
    return AffinePolygon::from_points(std::move(pts));
}

} // namespace

TEST_CASE("polygon construction guards") {
    CHECK_THROWS_WITH_AS(AffinePolygon::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
                         doctest::Contains("at least 5"), Error);
    // three consecutive collinear vertices
    std::vector<HomPoint> v = {HomPoint::from_affine(0, 0), HomPoint::from_affine(1, 0),
                               HomPoint::from_affine(2, 0), HomPoint::from_affine(2, 2),
                               HomPoint::from_affine(0, 2)};
    CHECK_THROWS_WITH_AS(Polygon(std::move(v)), doctest::Contains("collinear"), Error);
}

TEST_CASE("is_convex basics") {
    CHECK(is_convex(regular_ngon(5)));
    const AffinePolygon reflex =
        AffinePolygon::from_points({{0, 0}, {2, 0}, {2, 2}, {1, 0.5}, {0, 2}});
    CHECK_FALSE(is_convex(reflex));
    const AffinePolygon flat =
        AffinePolygon::from_points({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK_THROWS_AS(is_convex(flat), Error);
    // clockwise convex pentagon is still convex
    std::vector<Vec2> cw = regular_ngon(5).points();
    std::reverse(cw.begin(), cw.end());
    CHECK(is_convex(AffinePolygon::from_points(cw)));
    // pentagram star: all turns share a sign but wind twice
    std::vector<Vec2> star;
    for (int i = 0; i < 5; ++i) {
        const double a = 2.0 * kPi * (2 * i) / 5;
        star.emplace_back(std::cos(a), std::sin(a));
    }
    CHECK_FALSE(is_convex(AffinePolygon::from_points(star)));
}

TEST_CASE("dual of regular pentagon") {
    const Polygon dual = dual_polygon(regular_ngon(5).to_polygon());
    const double want_r = 1.0 / std::cos(kPi / 5.0);
    for (int i = 0; i < 5; ++i) {
        const Vec2 q = dual.vertex(i).to_affine();
        CHECK(q.norm() == doctest::Approx(want_r).epsilon(1e-12));
    }
    CHECK(is_convex(dual));
    // vertex 0 is the side (v0, v1) read as a dual point: direction opposite
    // the side's outward normal, i.e. at angle pi/5 + pi
    const Vec2 q0 = dual.vertex(0).to_affine();
    CHECK(std::atan2(q0.y(), q0.x()) == doctest::Approx(kPi / 5.0 - kPi).epsilon(1e-12));
}

TEST_CASE("dual involution shifts by one") {
    Rng rng(5);
    for (int n : {5, 7}) {
        for (int trial = 0; trial < 25; ++trial) {
            const Polygon p = random_convex_polygon(n, rng).to_polygon();
            const Polygon dd = dual_polygon(dual_polygon(p));
            for (int i = 0; i < n; ++i)
                CHECK(proj_equal(dd.vertex(i), p.vertex(i + 1), 1e-10));
        }
    }
}

TEST_CASE("dual vertex at infinity when a side passes through the origin") {
    // side 0 lies on the line y = -x
    const AffinePolygon p = AffinePolygon::from_points(
        {{0.5, -0.5}, {1.5, -1.5}, {3, 0.5}, {1, 2}, {-0.5, 1}});
    CHECK(is_convex(p));
    const Polygon dual = dual_polygon(p.to_polygon());
    CHECK(proj_equal(dual.vertex(0), HomPoint(1, 1, 0), 1e-12));
    CHECK(dual.vertex(0).at_infinity());
    CHECK_FALSE(is_convex(dual));
}

TEST_CASE("convexity_in_chart") {
    const Polygon pent = regular_ngon(5).to_polygon();
    CHECK(convexity_in_chart(pent, HomLine::infinity_line()));
    // a chart line crossing the interior separates the vertices
    CHECK_FALSE(convexity_in_chart(pent, HomLine(1, 0, 0)));
    // vertex on the chart line
    CHECK_THROWS_AS(convexity_in_chart(pent, join(HomPoint::from_affine(1, 0),
                                                  HomPoint::from_affine(0, 5))),
                    Error);
}

TEST_CASE("convexity_in_chart is chart-map independent") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Polygon p = random_convex_polygon(5, rng).to_polygon();
        const HomLine line(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(1.5, 3.0));
        bool on_vertex = false;
        for (int i = 0; i < 5; ++i)
            on_vertex = on_vertex || std::abs(incidence(line, p.vertex(i))) < 1e-6;
        if (on_vertex)
            continue;
        const bool direct = convexity_in_chart(p, line);
        // alternative completion of the chart
        const ProjMap alt = chart_map(line, 1);
        std::vector<HomPoint> moved;
        for (int i = 0; i < 5; ++i)
            moved.push_back(apply(alt, p.vertex(i)));
        CHECK(direct == is_convex(Polygon(std::move(moved))));
    }
}

TEST_CASE("lemma: dual of convex polygon around the origin is convex around infinity") {
    Rng rng(23);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const AffinePolygon raw = random_convex_polygon(5, rng);
        const Vec2 c = raw.centroid();
        std::vector<Vec2> shifted;
        for (const Vec2& q : raw.points())
            shifted.push_back(q - c);
        const AffinePolygon p = AffinePolygon::from_points(std::move(shifted));
        REQUIRE(contains_point_strict(p, Vec2::Zero()));
        const Polygon dual = dual_polygon(p.to_polygon());
        CHECK(convexity_in_chart(dual, HomLine(0, 0, 1)));
        const AffinePolygon dual_aff = dual.to_affine();
        CHECK(contains_point_strict(dual_aff, Vec2::Zero()));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("centroid_inertia_normalize") {
    const AffinePolygon base = regular_ngon(6, 2.0, 0.3, Vec2(4, -1));
    auto [norm, map] = centroid_inertia_normalize(base);

    CHECK(norm.centroid().norm() < 1e-12);
    Mat2 second = Mat2::Zero();
    for (const Vec2& q : norm.points())
        second += q * q.transpose();
    second /= norm.size();
    CHECK((second - Mat2::Identity()).norm() < 1e-12);
    CHECK(std::abs(norm.point(0).y()) < 1e-12);
    CHECK(norm.point(0).x() > 0.0);

    // the returned map reproduces the normalization
    for (int i = 0; i < base.size(); ++i) {
        const Vec2 moved = apply(map, HomPoint::from_affine(base.point(i))).to_affine();
        CHECK((moved - norm.point(i)).norm() < 1e-12);
    }

    SUBCASE("idempotent") {
        auto [again, map2] = centroid_inertia_normalize(norm);
        for (int i = 0; i < norm.size(); ++i)
            CHECK((again.point(i) - norm.point(i)).norm() < 1e-10);
        CHECK(proj_distance(map2, ProjMap::identity()) < 1e-10);
    }
    SUBCASE("translation is undone") {
        std::vector<Vec2> moved;
        for (const Vec2& q : norm.points())
            moved.push_back(q + Vec2(5, 7));
        auto [back, map3] = centroid_inertia_normalize(AffinePolygon::from_points(moved));
        for (int i = 0; i < norm.size(); ++i)
            CHECK((back.point(i) - norm.point(i)).norm() < 1e-10);
        CHECK(proj_distance(map3, ProjMap::translation(Vec2(-5, -7))) < 1e-10);
    }
    SUBCASE("scale quotient") {
        std::vector<Vec2> scaled;
        for (const Vec2& q : base.points())
            scaled.push_back(3.5 * q);
        auto [snorm, smap] = centroid_inertia_normalize(AffinePolygon::from_points(scaled));
        for (int i = 0; i < norm.size(); ++i)
            CHECK((snorm.point(i) - norm.point(i)).norm() < 1e-10);
    }
    SUBCASE("degenerate second moment") {
        std::vector<Vec2> line;
        for (int i = 0; i < 5; ++i)
            line.emplace_back(i, 2.0 * i);
        CHECK_THROWS_AS(centroid_inertia_normalize(AffinePolygon::from_points(line)), Error);
    }
}

TEST_CASE("random_convex_polygon") {
    const AffinePolygon p = random_convex_polygon(5, 1);
    CHECK(is_convex(p));
    CHECK(p.counter_clockwise());

    const AffinePolygon q = random_convex_polygon(5, 1);
    REQUIRE(q.size() == p.size());
    for (int i = 0; i < p.size(); ++i)
        CHECK((p.point(i) - q.point(i)).norm() == 0.0); // determinism, bitwise

    const AffinePolygon big = random_convex_polygon(12, 99);
    CHECK(big.size() == 12);
    CHECK(is_convex(big));

    CHECK_THROWS_AS(random_convex_polygon(4, 1), Error);
}

TEST_CASE("cyclic shift matcher") {
    const Polygon p = regular_ngon(7).to_polygon();
    std::vector<HomPoint> rotated;
    for (int i = 0; i < 7; ++i)
        rotated.push_back(p.vertex(i + 3));
    const Polygon q(std::move(rotated));
    const auto shift = cyclic_shift_match(p, q);
    REQUIRE(shift.has_value());
    CHECK(*shift == 3);
    CHECK(polygon_proj_equal(p, p));
    CHECK_FALSE(polygon_proj_equal(p, q));
}
