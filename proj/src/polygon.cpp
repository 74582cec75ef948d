#include "pentagram/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pentagram {

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double signed_area(const std::vector<Vec2>& p) {
    double s = 0.0;
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        s += cross2(p[i], p[(i + 1) % n]);
    return 0.5 * s;
}

} // namespace

double diameter(const std::vector<Vec2>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, (pts[i] - pts[j]).norm());
    return d;
}

Polygon::Polygon(std::vector<HomPoint> vertices) : v_(std::move(vertices)) {
    const int n = size();
    if (n < 5)
        throw Error(ErrorCode::InvalidInput, "n must be at least 5");
    for (int i = 0; i < n; ++i) {
        if (proj_equal(v_[i], v_[(i + 1) % n]))
            throw Error(ErrorCode::DegeneratePolygon, "consecutive vertices coincide");
        Mat3 t;
        t.col(0) = v_[i].coords();
        t.col(1) = v_[(i + 1) % n].coords();
        t.col(2) = v_[(i + 2) % n].coords();
        if (std::abs(t.determinant()) <= tolerance())
            throw Error(ErrorCode::DegeneratePolygon, "three consecutive vertices collinear");
    }
}

bool Polygon::all_finite(double tol) const {
    return std::none_of(v_.begin(), v_.end(),
                        [tol](const HomPoint& p) { return p.at_infinity(tol); });
}

AffinePolygon Polygon::to_affine() const {
    std::vector<Vec2> pts;
    pts.reserve(v_.size());
    for (const HomPoint& p : v_)
        pts.push_back(p.to_affine());
    return AffinePolygon::from_points(std::move(pts));
}

AffinePolygon AffinePolygon::from_points(std::vector<Vec2> points) {
    if (points.size() < 5)
        throw Error(ErrorCode::InvalidInput, "n must be at least 5");
    for (const Vec2& p : points)
        if (!p.allFinite())
            throw Error(ErrorCode::InvalidInput, "vertex coordinates must be finite");
    const bool ccw = signed_area(points) > 0.0;
    return AffinePolygon(std::move(points), ccw);
}

Vec2 AffinePolygon::centroid() const {
    Vec2 c = Vec2::Zero();
    for (const Vec2& p : p_)
        c += p;
    return c / static_cast<double>(size());
}

double AffinePolygon::diameter() const { return pentagram::diameter(p_); }

Polygon AffinePolygon::to_polygon() const {
    std::vector<HomPoint> v;
    v.reserve(p_.size());
    for (const Vec2& p : p_)
        v.push_back(HomPoint::from_affine(p));
    return Polygon(std::move(v));
}

AffinePolygon AffinePolygon::oriented_ccw() const {
    if (ccw_)
        return *this;
    std::vector<Vec2> rev(p_.rbegin(), p_.rend());
    return AffinePolygon(std::move(rev), true);
}

bool is_convex(const AffinePolygon& p) {
    const int n = p.size();
    const double scale2 = p.diameter() * p.diameter();
    std::vector<double> turns(n);
    for (int i = 0; i < n; ++i) {
        const Vec2 e1 = p.point(i + 1) - p.point(i);
        const Vec2 e2 = p.point(i + 2) - p.point(i + 1);
        turns[i] = cross2(e1, e2);
        if (std::abs(turns[i]) <= tolerance() * scale2)
            throw Error(ErrorCode::DegeneratePolygon, "collinear edge pair");
    }
    const bool pos = turns[0] > 0.0;
    for (double t : turns)
        if ((t > 0.0) != pos)
            return false;
    // One full revolution of the edge direction, which rules out star
    // polygons whose turns are also all of one sign.
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2 e1 = p.point(i + 1) - p.point(i);
        const Vec2 e2 = p.point(i + 2) - p.point(i + 1);
        total += std::atan2(cross2(e1, e2), e1.dot(e2));
    }
    return std::lround(total / (2.0 * std::numbers::pi)) == (pos ? 1 : -1);
}

bool is_convex(const Polygon& p) {
    if (!p.all_finite())
        return false;
    return is_convex(p.to_affine());
}

Polygon dual_polygon(const Polygon& p) {
    const int n = p.size();
    std::vector<HomPoint> duals;
    duals.reserve(n);
    for (int i = 0; i < n; ++i)
        duals.emplace_back(p.side(i).coeffs());
    return Polygon(std::move(duals));
}

ProjMap chart_map(const HomLine& chart_line, int axis_hint) {
    const Vec3 l = chart_line.coeffs();
    // Complete l to a basis: pick the axis least aligned with l, offset by the
    // hint so callers can request a different (but still valid) completion.
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(l[k]) < std::abs(l[best]))
            best = k;
    const int axis = (best + axis_hint) % 3;
    Vec3 e = Vec3::Zero();
    e[axis] = 1.0;
    Vec3 r1 = l.cross(e);
    if (r1.norm() <= tolerance())
        throw Error(ErrorCode::InvalidInput, "degenerate chart axis");
    r1.normalize();
    const Vec3 r2 = l.cross(r1).normalized();
    Mat3 m;
    m.row(0) = r1;
    m.row(1) = r2;
    m.row(2) = l;
    return ProjMap(m);
}

bool convexity_in_chart(const Polygon& p, const HomLine& chart_line) {
    for (int i = 0; i < p.size(); ++i)
        if (std::abs(incidence(chart_line, p.vertex(i))) <= tolerance())
            throw Error(ErrorCode::VertexOnChartLine, "vertex lies on the chart line");
    const ProjMap m = chart_map(chart_line);
    std::vector<HomPoint> moved;
    moved.reserve(p.size());
    for (int i = 0; i < p.size(); ++i)
        moved.push_back(apply(m, p.vertex(i)));
    return is_convex(Polygon(std::move(moved)));
}

std::pair<AffinePolygon, ProjMap> centroid_inertia_normalize(const AffinePolygon& p) {
    const int n = p.size();
    const Vec2 c = p.centroid();
    Mat2 second = Mat2::Zero();
    for (const Vec2& q : p.points()) {
        const Vec2 d = q - c;
        second += d * d.transpose();
    }
    second /= static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Mat2> es(second);
    if (es.eigenvalues().minCoeff() <= 1e-14 * es.eigenvalues().maxCoeff())
        throw Error(ErrorCode::DegeneratePolygon, "rank-deficient vertex second moment");
    const Mat2 whiten = es.operatorInverseSqrt();

    // Fix the residual rotation by aligning vertex 0 with the +x axis.
    const Vec2 w0 = whiten * (p.point(0) - c);
    const double theta = std::atan2(w0.y(), w0.x());
    Mat2 rot;
    rot << std::cos(-theta), -std::sin(-theta), std::sin(-theta), std::cos(-theta);
    const Mat2 a = rot * whiten;

    std::vector<Vec2> out;
    out.reserve(n);
    for (const Vec2& q : p.points())
        out.push_back(a * (q - c));
    return {AffinePolygon::from_points(std::move(out)), ProjMap::affine(a, -a * c)};
}

AffinePolygon random_convex_polygon(int n, Rng& rng) {
    if (n < 5)
        throw Error(ErrorCode::InvalidInput, "n must be at least 5");
    const double min_gap = 0.1 / n;
    std::vector<double> ang(n);
    for (;;) {
        for (double& a : ang)
            a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        std::sort(ang.begin(), ang.end());
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const double gap =
                (i + 1 < n) ? ang[i + 1] - ang[i] : ang[0] + 2.0 * std::numbers::pi - ang[n - 1];
            if (gap < min_gap) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        std::vector<Vec2> pts(n);
        for (int i = 0; i < n; ++i) {
            const double r = rng.uniform(0.5, 1.0);
            pts[i] = Vec2(r * std::cos(ang[i]), r * std::sin(ang[i]));
        }
        AffinePolygon poly = AffinePolygon::from_points(std::move(pts));
        try {
            if (is_convex(poly))
                return poly;
        } catch (const Error&) {
            // degenerate draw, resample
        }
    }
}

AffinePolygon random_convex_polygon(int n, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return random_convex_polygon(n, rng);
}

bool contains_point_strict(const AffinePolygon& p, const Vec2& q) {
    const int n = p.size();
    const double margin = tolerance() * p.diameter();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2 a = p.point(i) - q;
        const Vec2 b = p.point(i + 1) - q;
        // distance from q to the segment's line
        const Vec2 e = p.point(i + 1) - p.point(i);
        const double dist = std::abs(cross2(e, q - p.point(i))) / e.norm();
        if (dist <= margin)
            return false;
        total += std::atan2(cross2(a, b), a.dot(b));
    }
    return std::abs(total) > std::numbers::pi;
}

bool polygon_proj_equal(const Polygon& a, const Polygon& b, double tol) {
    if (a.size() != b.size())
        return false;
    for (int i = 0; i < a.size(); ++i)
        if (!proj_equal(a.vertex(i), b.vertex(i), tol))
            return false;
    return true;
}

std::optional<int> cyclic_shift_match(const Polygon& a, const Polygon& b, double tol) {
    if (a.size() != b.size())
        return std::nullopt;
    const int n = a.size();
    for (int s = 0; s < n; ++s) {
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            all = proj_equal(a.vertex(i + s), b.vertex(i), tol);
        if (all)
            return s;
    }
    return std::nullopt;
}

} // namespace pentagram
