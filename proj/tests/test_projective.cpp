#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pentagram/projective.hpp"
#include "pentagram/rng.hpp"

using namespace pentagram;

namespace {

HomPoint random_point(Rng& rng) {
    for (;;) {
        const Vec3 v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (v.norm() > 0.1)
            return HomPoint(v);
    }
}

ProjMap random_invertible(Rng& rng) {
    for (;;) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m(r, c) = rng.uniform(-1, 1);
        if (std::abs(m.determinant()) > 0.05)
            return ProjMap(m);
    }
}

} // namespace

TEST_CASE("join axis cases") {
    const HomLine l = join(HomPoint(0, 0, 1), HomPoint(1, 0, 1));
    CHECK(proj_equal(l, HomLine(0, 1, 0)));

    const HomLine inf = join(HomPoint(1, 0, 0), HomPoint(0, 1, 0));
    CHECK(proj_equal(inf, HomLine::infinity_line()));

    CHECK_THROWS_WITH_AS(join(HomPoint(0, 0, 1), HomPoint(0, 0, 2)),
                         doctest::Contains("CoincidentPoints"), Error);
}

TEST_CASE("meet axis and parallel cases") {
    CHECK(proj_equal(meet(HomLine(1, 0, 0), HomLine(0, 1, 0)), HomPoint(0, 0, 1)));
    // parallel horizontal lines meet at the x-direction point at infinity
    CHECK(proj_equal(meet(HomLine(0, 1, 0), HomLine(0, 1, -1)), HomPoint(1, 0, 0)));
    const HomPoint p = meet(HomLine(1, 1, -1), HomLine(1, -1, 0));
    const Vec2 a = p.to_affine();
    CHECK(a.x() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a.y() == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(meet(HomLine(1, 2, 3), HomLine(2, 4, 6)), Error);
}

TEST_CASE("to_affine") {
    const Vec2 a = HomPoint(2, 4, 2).to_affine();
    CHECK(a.x() == doctest::Approx(1.0));
    CHECK(a.y() == doctest::Approx(2.0));
    CHECK_THROWS_AS(HomPoint(1, 0, 0).to_affine(), Error);
    const Vec2 b = HomPoint(0, 0, -3).to_affine();
    CHECK(b.norm() == doctest::Approx(0.0));
}

TEST_CASE("apply and kernel") {
    const HomPoint p(1, 1, 1);
    CHECK(proj_equal(apply(ProjMap::identity(), p), p));
    CHECK(proj_equal(apply(ProjMap(Mat3(Vec3(2, 2, 1).asDiagonal())), p), HomPoint(2, 2, 1)));
    const ProjMap drop(Mat3(Vec3(1, 1, 0).asDiagonal()));
    CHECK_THROWS_WITH_AS(apply(drop, HomPoint(0, 0, 1)), doctest::Contains("KernelHit"), Error);
    CHECK_THROWS_WITH_AS(apply_to_line(drop, HomLine(1, 0, 0)),
                         doctest::Contains("SingularMap"), Error);
}

TEST_CASE("is_affine") {
    CHECK(is_affine(ProjMap(Mat3(Vec3(2, 3, 1).asDiagonal()))));
    Mat3 m = Mat3::Identity();
    m(2, 0) = 0.1;
    CHECK_FALSE(is_affine(ProjMap(m)));
    const double t = 0.7;
    Mat3 rot;
    rot << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
    CHECK(is_affine(ProjMap(rot)));
}

TEST_CASE("proj_equal on maps") {
    Rng rng(11);
    const ProjMap m = random_invertible(rng);
    CHECK(proj_equal(m, ProjMap(Mat3(7.0 * m.matrix()))));
    CHECK(proj_equal(m, ProjMap(Mat3(-m.matrix()))));
    CHECK_FALSE(proj_equal(ProjMap::identity(),
                           ProjMap(Mat3(Vec3(1, 1, 1.01).asDiagonal())), 1e-8));
}

TEST_CASE("join/meet duality") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const HomPoint p = random_point(rng);
        const HomPoint q = random_point(rng);
        const HomPoint r = random_point(rng);
        Mat3 t;
        t.col(0) = p.coords();
        t.col(1) = q.coords();
        t.col(2) = r.coords();
        if (std::abs(t.determinant()) < 1e-3)
            continue; // nearly collinear triple, skip
        CHECK(proj_equal(meet(join(p, q), join(p, r)), p, 1e-10));
    }
}

TEST_CASE("incidence preserved by invertible maps") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const HomPoint p = random_point(rng);
        const HomPoint q = random_point(rng);
        if (proj_equal(p, q, 1e-3))
            continue;
        const HomLine l = join(p, q);
        const ProjMap g = random_invertible(rng);
        const HomLine moved = apply_to_line(g, l);
        CHECK(std::abs(incidence(moved, apply(g, p))) < 1e-10);
        CHECK(std::abs(incidence(moved, apply(g, q))) < 1e-10);
    }
}

TEST_CASE("to_affine inverts embedding") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec2 p(rng.uniform(-10, 10), rng.uniform(-10, 10));
        const Vec2 back = HomPoint::from_affine(p).to_affine();
        CHECK((back - p).norm() < 1e-12 * (1.0 + p.norm()));
    }
}

TEST_CASE("tolerance guard") {
    CHECK(tolerance() == doctest::Approx(1e-9));
    {
        ToleranceGuard guard(1e-6);
        CHECK(tolerance() == doctest::Approx(1e-6));
    }
    CHECK(tolerance() == doctest::Approx(1e-9));
    CHECK_THROWS_AS(set_tolerance(-1.0), Error);
}
