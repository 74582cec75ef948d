#include "pentagram/projective.hpp"

#include <cmath>

namespace pentagram {

namespace {

Vec3 unit_or_throw(const Vec3& v, const char* what) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw Error(ErrorCode::InvalidInput, what);
    return v / n;
}

} // namespace

HomPoint::HomPoint(const Vec3& coords)
    : c_(unit_or_throw(coords, "homogeneous point needs a nonzero finite triple")) {}

Vec2 HomPoint::to_affine() const {
    if (at_infinity())
        throw Error(ErrorCode::PointAtInfinity, "point has no affine representative");
    return Vec2(c_.x() / c_.z(), c_.y() / c_.z());
}

HomLine::HomLine(const Vec3& coeffs)
    : c_(unit_or_throw(coeffs, "line needs a nonzero finite coefficient triple")) {}

ProjMap::ProjMap(const Mat3& m) : m_(m) {
    if (!m.allFinite() || !(m.cwiseAbs().maxCoeff() > 0.0))
        throw Error(ErrorCode::InvalidInput, "projective map needs a nonzero finite matrix");
}

ProjMap ProjMap::translation(const Vec2& t) {
    Mat3 m = Mat3::Identity();
    m(0, 2) = t.x();
    m(1, 2) = t.y();
    return ProjMap(m);
}

ProjMap ProjMap::scaling(double sx, double sy) {
    Mat3 m = Mat3::Identity();
    m(0, 0) = sx;
    m(1, 1) = sy;
    return ProjMap(m);
}

ProjMap ProjMap::affine(const Mat2& a, const Vec2& t) {
    Mat3 m = Mat3::Identity();
    m.topLeftCorner<2, 2>() = a;
    m(0, 2) = t.x();
    m(1, 2) = t.y();
    return ProjMap(m);
}

bool ProjMap::invertible(double tol) const {
    const Mat3 n = m_ / m_.cwiseAbs().maxCoeff();
    return std::abs(n.determinant()) > tol;
}

ProjMap ProjMap::inverse() const {
    if (!invertible())
        throw Error(ErrorCode::SingularMap, "map is not invertible");
    return ProjMap(Mat3(m_.inverse()));
}

HomLine join(const HomPoint& p, const HomPoint& q) {
    const Vec3 c = p.coords().cross(q.coords());
    if (c.norm() <= tolerance())
        throw Error(ErrorCode::CoincidentPoints, "join of projectively equal points");
    return HomLine(c);
}

HomPoint meet(const HomLine& l1, const HomLine& l2) {
    const Vec3 c = l1.coeffs().cross(l2.coeffs());
    if (c.norm() <= tolerance())
        throw Error(ErrorCode::CoincidentLines, "meet of projectively equal lines");
    return HomPoint(c);
}

double incidence(const HomLine& l, const HomPoint& p) {
    return l.coeffs().dot(p.coords());
}

bool proj_equal(const HomPoint& p, const HomPoint& q, double tol) {
    return p.coords().cross(q.coords()).norm() <= tol;
}

bool proj_equal(const HomLine& l, const HomLine& m, double tol) {
    return l.coeffs().cross(m.coeffs()).norm() <= tol;
}

Mat3 unit_max_normalized(const Mat3& m) {
    double best = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (std::abs(m(r, c)) > std::abs(best))
                best = m(r, c);
    return m / best;
}

double proj_distance(const ProjMap& a, const ProjMap& b) {
    return (unit_max_normalized(a.matrix()) - unit_max_normalized(b.matrix()))
        .cwiseAbs()
        .maxCoeff();
}

bool proj_equal(const ProjMap& a, const ProjMap& b, double tol) {
    return proj_distance(a, b) <= tol;
}

HomPoint apply(const ProjMap& m, const HomPoint& p) {
    const Vec3 w = m.matrix() * p.coords();
    if (w.norm() <= tolerance() * m.matrix().cwiseAbs().maxCoeff())
        throw Error(ErrorCode::KernelHit, "point maps into the kernel");
    return HomPoint(w);
}

HomLine apply_to_line(const ProjMap& m, const HomLine& l) {
    if (!m.invertible())
        throw Error(ErrorCode::SingularMap, "line pushforward needs an invertible map");
    return HomLine(Vec3(m.matrix().inverse().transpose() * l.coeffs()));
}

bool is_affine(const ProjMap& m, double tol) {
    const Mat3 n = unit_max_normalized(m.matrix());
    const double xy = std::max(std::abs(n(2, 0)), std::abs(n(2, 1)));
    return xy <= tol && std::abs(n(2, 2)) > tol;
}

} // namespace pentagram
