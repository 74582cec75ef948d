#pragma once

#include <Eigen/Dense>

#include "pentagram/error.hpp"
#include "pentagram/tolerance.hpp"

namespace pentagram {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// Point of the projective plane, homogeneous triple modulo nonzero scale.
// Representatives are kept at unit Euclidean norm; the construction scale is
// positive, so the stored sign is the caller's.
class HomPoint {
public:
    HomPoint(double x, double y, double z) : HomPoint(Vec3(x, y, z)) {}
    explicit HomPoint(const Vec3& coords);

    static HomPoint from_affine(double x, double y) { return HomPoint(x, y, 1.0); }
    static HomPoint from_affine(const Vec2& p) { return HomPoint(p.x(), p.y(), 1.0); }

    const Vec3& coords() const { return c_; }
    double x() const { return c_.x(); }
    double y() const { return c_.y(); }
    double z() const { return c_.z(); }

    bool at_infinity(double tol = tolerance()) const { return std::abs(c_.z()) <= tol; }

    // Chart P^2 minus the line at infinity. Throws PointAtInfinity.
    Vec2 to_affine() const;

private:
    Vec3 c_;
};

// Line {ax + by + cz = 0}, coefficients modulo scale, unit norm representative.
class HomLine {
public:
    HomLine(double a, double b, double c) : HomLine(Vec3(a, b, c)) {}
    explicit HomLine(const Vec3& coeffs);

    static HomLine infinity_line() { return HomLine(0.0, 0.0, 1.0); }

    const Vec3& coeffs() const { return c_; }

private:
    Vec3 c_;
};

// 3x3 real matrix acting on homogeneous points, considered modulo scale when
// compared, but stored exactly as built (some operators carry a canonical
// normalization that must not be disturbed).
class ProjMap {
public:
    ProjMap() : m_(Mat3::Identity()) {}
    explicit ProjMap(const Mat3& m);

    static ProjMap identity() { return ProjMap(); }
    static ProjMap translation(const Vec2& t);
    static ProjMap scaling(double sx, double sy);
    // Affine map x |-> A x + t embedded as a projective matrix.
    static ProjMap affine(const Mat2& a, const Vec2& t);

    const Mat3& matrix() const { return m_; }

    bool invertible(double tol = 1e-12) const;
    ProjMap inverse() const; // throws SingularMap

    // Composition: (*this) after other.
    ProjMap compose(const ProjMap& other) const { return ProjMap(m_ * other.m_); }

private:
    Mat3 m_;
};

// Connecting line of two projectively distinct points (cross product).
HomLine join(const HomPoint& p, const HomPoint& q);

// Intersection point of two projectively distinct lines.
HomPoint meet(const HomLine& l1, const HomLine& l2);

// Signed incidence residual <line, point>, scale-free because both carry unit
// norm representatives.
double incidence(const HomLine& l, const HomPoint& p);

bool proj_equal(const HomPoint& p, const HomPoint& q, double tol = tolerance());
bool proj_equal(const HomLine& l, const HomLine& m, double tol = tolerance());

// Entrywise distance after normalizing both matrices so the largest-magnitude
// entry equals +1.
double proj_distance(const ProjMap& a, const ProjMap& b);
bool proj_equal(const ProjMap& a, const ProjMap& b, double tol = tolerance());

// m acting on a point; throws KernelHit when m*p vanishes.
HomPoint apply(const ProjMap& m, const HomPoint& p);

// Pushforward of a line: lines transform by the inverse transpose.
// Throws SingularMap for rank-deficient m.
HomLine apply_to_line(const ProjMap& m, const HomLine& l);

// True when m maps the line at infinity to itself, i.e. the third row of the
// unit-max-normalized matrix is proportional to (0,0,1).
bool is_affine(const ProjMap& m, double tol = tolerance());

// Matrix scaled so its largest-|entry| is +1 (deterministic tie-break: first
// maximal entry in row-major order).
Mat3 unit_max_normalized(const Mat3& m);

} // namespace pentagram
