#include "pentagram/conics.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace pentagram {

namespace {

Mat3 unit_max_sym(const Mat3& m) {
    double best = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (std::abs(m(r, c)) > std::abs(best))
                best = m(r, c);
    if (best == 0.0)
        throw Error(ErrorCode::InvalidInput, "zero conic matrix");
    return m / best;
}

// Null direction of the 5x6 incidence system built from five homogeneous
// triples; rank must be 5.
Mat3 fit_conic(const std::array<Vec3, 5>& rows_src) {
    Eigen::Matrix<double, 5, 6> a;
    for (int k = 0; k < 5; ++k) {
        const Vec3& p = rows_src[k];
        a(k, 0) = p.x() * p.x();
        a(k, 1) = p.x() * p.y();
        a(k, 2) = p.y() * p.y();
        a(k, 3) = p.x() * p.z();
        a(k, 4) = p.y() * p.z();
        a(k, 5) = p.z() * p.z();
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 5, 6>> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(4) <= 1e-10 * sv(0))
        throw Error(ErrorCode::DegenerateConfiguration, "incidence system rank below 5");
    const Eigen::Matrix<double, 6, 1> m = svd.matrixV().col(5);
    Mat3 q;
    q << m(0), m(1) / 2, m(3) / 2,
        m(1) / 2, m(2), m(4) / 2,
        m(3) / 2, m(4) / 2, m(5);
    return q;
}

} // namespace

Conic::Conic(const Mat3& q) : q_(unit_max_sym(0.5 * (q + q.transpose()))) {
    if (!q_.allFinite())
        throw Error(ErrorCode::InvalidInput, "conic matrix must be finite");
}

Conic Conic::from_coefficients(double a, double b, double c, double d, double e, double f) {
    Mat3 q;
    q << a, b / 2, d / 2,
        b / 2, c, e / 2,
        d / 2, e / 2, f;
    return Conic(q);
}

double Conic::evaluate(const HomPoint& p) const {
    return p.coords().dot(q_ * p.coords());
}

double Conic::tangency_residual(const HomLine& l) const {
    const Mat3 adj = adjugate(q_);
    const double scale = adj.cwiseAbs().maxCoeff();
    if (!(scale > 0.0))
        throw Error(ErrorCode::DegenerateConic, "conic has no dual");
    return l.coeffs().dot(adj * l.coeffs()) / scale;
}

HomLine Conic::polar(const HomPoint& p) const {
    return HomLine(Vec3(q_ * p.coords()));
}

HomPoint Conic::pole(const HomLine& l) const {
    return HomPoint(Vec3(adjugate(q_) * l.coeffs()));
}

bool Conic::degenerate(double tol) const {
    return std::abs(q_.determinant()) <= tol;
}

Mat3 adjugate(const Mat3& m) {
    Mat3 adj;
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return adj;
}

Conic conic_through_points(const std::array<HomPoint, 5>& pts) {
    std::array<Vec3, 5> rows;
    for (int k = 0; k < 5; ++k)
        rows[k] = pts[k].coords();
    const Conic c{fit_conic(rows)};
    if (c.degenerate())
        throw Error(ErrorCode::DegenerateConic, "fitted conic splits into lines");
    return c;
}

Conic conic_tangent_to_lines(const std::array<HomLine, 5>& lines) {
    std::array<Vec3, 5> rows;
    for (int k = 0; k < 5; ++k)
        rows[k] = lines[k].coeffs();
    return Conic{fit_conic(rows)};
}

namespace {

std::array<HomPoint, 5> pentagon_vertices(const Polygon& p) {
    if (p.size() != 5)
        throw Error(ErrorCode::InvalidInput, "pentagon operation needs n = 5");
    return {p.vertex(0), p.vertex(1), p.vertex(2), p.vertex(3), p.vertex(4)};
}

std::array<HomLine, 5> pentagon_sides(const Polygon& p) {
    if (p.size() != 5)
        throw Error(ErrorCode::InvalidInput, "pentagon operation needs n = 5");
    return {p.side(0), p.side(1), p.side(2), p.side(3), p.side(4)};
}

} // namespace

Conic circumscribed_conic(const Polygon& pentagon) {
    return conic_through_points(pentagon_vertices(pentagon));
}

Conic inscribed_conic(const Polygon& pentagon) {
    const Conic dual = conic_tangent_to_lines(pentagon_sides(pentagon));
    if (dual.degenerate())
        throw Error(ErrorCode::DegenerateConfiguration, "side lines admit no proper conic");
    return Conic(adjugate(dual.matrix()));
}

ConicCenter conic_center(const Conic& c) {
    if (c.degenerate())
        throw Error(ErrorCode::DegenerateConic, "center of a degenerate conic");
    const HomPoint center = c.pole(HomLine::infinity_line());
    return ConicCenter{center, center.at_infinity()};
}

PentagonConicData pentagon_conics(const Polygon& pentagon) {
    const Conic qc = circumscribed_conic(pentagon);
    const Conic qi = inscribed_conic(pentagon);
    const Mat3 r = qi.matrix().partialPivLu().solve(qc.matrix());
    return PentagonConicData{qc, qi, ProjMap(r), conic_center(qc).point, conic_center(qi).point};
}

ProjMap r_operator(const Polygon& pentagon) {
    const Conic qc = circumscribed_conic(pentagon);
    const Conic qi = inscribed_conic(pentagon);
    return ProjMap(Mat3(qi.matrix().partialPivLu().solve(qc.matrix())));
}

Polygon kasner_I(const Polygon& pentagon) {
    const auto sides = pentagon_sides(pentagon);
    const Conic dual = conic_tangent_to_lines(sides);
    if (dual.degenerate())
        throw Error(ErrorCode::DegenerateConfiguration, "side lines admit no proper conic");
    std::vector<HomPoint> tangency;
    tangency.reserve(5);
    for (const HomLine& s : sides)
        tangency.emplace_back(Vec3(dual.matrix() * s.coeffs()));
    return Polygon(std::move(tangency));
}

bool is_concentric(const Polygon& pentagon, double tol_c) {
    const PentagonConicData data = pentagon_conics(pentagon);
    if (data.center_c.at_infinity() || data.center_i.at_infinity())
        throw Error(ErrorCode::CenterAtInfinity, "conic center at infinity");

    const Vec2 cc = data.center_c.to_affine();
    const Vec2 ci = data.center_i.to_affine();
    double mean_sq = 0.0;
    for (int i = 0; i < pentagon.size(); ++i)
        mean_sq += (pentagon.vertex(i).to_affine() - cc).squaredNorm();
    const double scale = std::sqrt(mean_sq / pentagon.size());

    const bool by_centers = (cc - ci).norm() <= tol_c * scale;
    const bool by_affinity = is_affine(data.r_map);
    if (by_centers != by_affinity)
        throw Error(ErrorCode::InternalInconsistency,
                    "center-distance and R-affinity criteria disagree");
    return by_centers;
}

} // namespace pentagram
