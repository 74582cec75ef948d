#include "pentagram/glick.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pentagram {

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct Terms {
    std::vector<Vec2> d;
    std::vector<double> area;
};

// Triangle terms on the CCW orientation; signed=false rejects non-positive
// areas (convex CCW precondition), signed=true only rejects vanishing ones.
std::optional<Terms> triangle_terms(const AffinePolygon& poly, bool allow_signed) {
    const AffinePolygon p = poly.oriented_ccw();
    const int n = p.size();
    const double floor = tolerance() * p.diameter() * p.diameter();
    Terms t;
    t.d.resize(n);
    t.area.resize(n);
    for (int i = 0; i < n; ++i) {
        const Vec2& a = p.point(i - 1);
        const Vec2& v = p.point(i);
        const Vec2& b = p.point(i + 1);
        t.d[i] = b - a;
        t.area[i] = 0.5 * cross2(v - a, b - v);
        if (std::abs(t.area[i]) <= floor)
            return std::nullopt;
        if (!allow_signed && t.area[i] <= 0.0)
            return std::nullopt;
    }
    return t;
}

Terms terms_or_throw(const AffinePolygon& p) {
    auto t = triangle_terms(p, false);
    if (!t)
        throw Error(ErrorCode::DegeneratePolygon,
                    "triangle area at or below tolerance (polygon must be strictly convex)");
    return *t;
}

} // namespace

Vec2 d_vector(const AffinePolygon& p) {
    const Terms t = terms_or_throw(p);
    Vec2 d = Vec2::Zero();
    for (std::size_t i = 0; i < t.d.size(); ++i)
        d += t.d[i] / t.area[i];
    return d;
}

double d_vector_scale(const AffinePolygon& p) {
    const Terms t = terms_or_throw(p);
    double s = 0.0;
    for (std::size_t i = 0; i < t.d.size(); ++i)
        s += t.d[i].norm() / t.area[i];
    return s;
}

std::optional<Vec2> d_vector_signed(const AffinePolygon& p) {
    auto t = triangle_terms(p, true);
    if (!t)
        return std::nullopt;
    Vec2 d = Vec2::Zero();
    for (std::size_t i = 0; i < t->d.size(); ++i)
        d += t->d[i] / t->area[i];
    return d;
}

double d_vector_relative(const AffinePolygon& p) {
    const Terms t = terms_or_throw(p);
    Vec2 d = Vec2::Zero();
    double s = 0.0;
    for (std::size_t i = 0; i < t.d.size(); ++i) {
        d += t.d[i] / t.area[i];
        s += t.d[i].norm() / t.area[i];
    }
    return d.norm() / s;
}

ProjMap glick_matrix(const Polygon& p) {
    const int n = p.size();
    Mat3 g = static_cast<double>(n) * Mat3::Identity();
    for (int i = 0; i < n; ++i) {
        const Vec3& a = p.vertex(i - 1).coords();
        const Vec3& vi = p.vertex(i).coords();
        const Vec3& b = p.vertex(i + 1).coords();
        const Vec3 c = b.cross(a); // det(a, v, b) = c . v
        const double den = c.dot(vi);
        if (std::abs(den) <= tolerance())
            throw Error(ErrorCode::DegeneratePolygon, "three consecutive vertices collinear");
        g -= (vi * c.transpose()) / den;
    }
    return ProjMap(g);
}

HomLine infinity_preimage_line(const AffinePolygon& poly) {
    const AffinePolygon p = poly.oriented_ccw();
    const Terms t = terms_or_throw(p);
    const int n = p.size();
    Vec2 d = Vec2::Zero();
    double w = 2.0 * n;
    for (int i = 0; i < n; ++i) {
        d += t.d[i] / t.area[i];
        w += cross2(p.point(i - 1), p.point(i + 1)) / t.area[i];
    }
    return HomLine(d.y(), -d.x(), -w);
}

GlickData glick_data(const AffinePolygon& poly) {
    const AffinePolygon p = poly.oriented_ccw();
    const Terms t = terms_or_throw(p);
    const int n = p.size();
    Vec2 d = Vec2::Zero();
    double scale = 0.0;
    double w = 2.0 * n;
    for (int i = 0; i < n; ++i) {
        d += t.d[i] / t.area[i];
        scale += t.d[i].norm() / t.area[i];
        w += cross2(p.point(i - 1), p.point(i + 1)) / t.area[i];
    }
    return GlickData{t.d,
                     t.area,
                     d,
                     glick_matrix(p.to_polygon()),
                     HomLine(d.y(), -d.x(), -w),
                     w,
                     scale};
}

bool glick_is_affine(const Polygon& p) { return is_affine(glick_matrix(p)); }

namespace {

// Real roots of lambda^3 - a lambda^2 + b lambda - c, closed form.
std::vector<double> real_cubic_roots(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = -2.0 * a * a * a / 27.0 + a * b / 3.0 - c;
    const double shift = a / 3.0;
    std::vector<double> roots;
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    const double scale3 = std::max({std::abs(p) * std::abs(p) * std::abs(p), q * q, 1e-300});
    if (disc > -1e-12 * scale3 && p < 0.0) {
        // three real roots (trigonometric form)
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift);
    } else if (std::abs(p) < 1e-14 && std::abs(q) < 1e-14) {
        roots.assign(3, shift); // triple root
    } else {
        // one real root (Cardano)
        const double rad = q * q / 4.0 + p * p * p / 27.0;
        if (rad >= 0.0) {
            const double s = std::sqrt(rad);
            roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) + shift);
        } else {
            // numerically on the three-real-root side after all
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double phi = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
            for (int k = 0; k < 3; ++k)
                roots.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift);
        }
    }
    // one Newton polish per root on the characteristic polynomial
    for (double& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const double f = ((r - a) * r + b) * r - c;
            const double df = (3.0 * r - 2.0 * a) * r + b;
            if (std::abs(df) > 0.0)
                r -= f / df;
        }
    }
    return roots;
}

Vec3 null_direction(const Mat3& m) {
    Vec3 best = Vec3::Zero();
    double best_norm = -1.0;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (const auto& pr : pairs) {
        const Vec3 c = Vec3(m.row(pr[0])).cross(Vec3(m.row(pr[1])));
        if (c.norm() > best_norm) {
            best_norm = c.norm();
            best = c;
        }
    }
    return best;
}

HomPoint fixed_point_by_iteration(const Mat3& m, const AffinePolygon& hull) {
    Vec3 w = HomPoint::from_affine(hull.centroid()).coords();
    for (int it = 0; it < 5000; ++it) {
        Vec3 next = m * (m * w);
        const double nn = next.norm();
        if (!(nn > 0.0))
            throw Error(ErrorCode::NoInteriorFixedPoint, "iteration hit the kernel");
        next /= nn;
        if (next.cross(w).norm() <= 1e-15) {
            w = next;
            break;
        }
        w = next;
    }
    HomPoint q(w);
    if (q.at_infinity() || !contains_point_strict(hull, q.to_affine()))
        throw Error(ErrorCode::NoInteriorFixedPoint, "iteration left the hull");
    return q;
}

} // namespace

HomPoint glick_fixed_point(const Polygon& p) {
    const Mat3 m = glick_matrix(p).matrix();
    const AffinePolygon hull = p.to_affine().oriented_ccw();

    const double tr = m.trace();
    const double minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) +
                          m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                          m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const std::vector<double> eigs = real_cubic_roots(tr, minors, m.determinant());

    // Near-coincident eigenvalues make null-space extraction unreliable;
    // the contraction property still pins the fixed point.
    const double eig_scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    if (eigs.size() == 3) {
        double min_gap = std::numeric_limits<double>::max();
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                min_gap = std::min(min_gap, std::abs(eigs[i] - eigs[j]));
        if (min_gap / eig_scale < 1e-7)
            return fixed_point_by_iteration(m, hull);
    }

    std::vector<HomPoint> interior;
    for (double lambda : eigs) {
        const Mat3 a = m - lambda * Mat3::Identity();
        Vec3 v = null_direction(a);
        if (v.norm() <= 1e-14 * eig_scale * eig_scale)
            continue;
        v.normalize();
        // one inverse-iteration step sharpens the direction
        const Mat3 shifted = a + (1e-12 * eig_scale) * Mat3::Identity();
        const Vec3 polished = shifted.partialPivLu().solve(v);
        if (polished.allFinite() && polished.norm() > 0.0)
            v = polished.normalized();
        HomPoint q(v);
        if (q.at_infinity())
            continue;
        if (!contains_point_strict(hull, q.to_affine()))
            continue;
        const bool duplicate = std::any_of(interior.begin(), interior.end(),
                                           [&](const HomPoint& r) { return proj_equal(r, q, 1e-7); });
        if (!duplicate)
            interior.push_back(q);
    }

    if (interior.empty())
        throw Error(ErrorCode::NoInteriorFixedPoint, "no eigenvector inside the hull");
    if (interior.size() > 1)
        throw Error(ErrorCode::AmbiguousFixedPoint, "several eigenvectors inside the hull");
    return interior.front();
}

} // namespace pentagram
