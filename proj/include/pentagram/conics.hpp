#pragma once

#include <array>
#include <vector>

#include "pentagram/polygon.hpp"
#include "pentagram/projective.hpp"

namespace pentagram {

// Conic {p^T q p = 0}: symmetric 3x3 matrix modulo scale, normalized so the
// largest-magnitude entry is +1.
class Conic {
public:
    explicit Conic(const Mat3& q);
    // a x^2 + b xy + c y^2 + d xz + e yz + f z^2
    static Conic from_coefficients(double a, double b, double c, double d, double e, double f);
    static Conic unit_circle() { return from_coefficients(1, 0, 1, 0, 0, -1); }

    const Mat3& matrix() const { return q_; }

    // Incidence residual p^T q p (dimensionless: q unit-max, p unit-norm).
    double evaluate(const HomPoint& p) const;

    // Tangency residual l^T adj(q) l, normalized by the adjugate's largest
    // entry. Zero exactly when l is tangent to the conic.
    double tangency_residual(const HomLine& l) const;

    // Polar line of a point / pole of a line with respect to the conic.
    HomLine polar(const HomPoint& p) const;
    HomPoint pole(const HomLine& l) const;

    bool degenerate(double tol = 1e-12) const;

private:
    Mat3 q_;
};

// 3x3 adjugate (transpose of the cofactor matrix).
Mat3 adjugate(const Mat3& m);

// Unique conic through five points in general position, from the null space
// of the 5x6 incidence system (smallest singular direction). Throws
// DegenerateConfiguration when the system rank drops below 5 and
// DegenerateConic when the fitted conic is singular (e.g. three collinear
// points force a line pair).
Conic conic_through_points(const std::array<HomPoint, 5>& pts);

// Conic tangent to five lines in general position (the same fit in the dual
// plane); the returned matrix is the dual (line) conic.
Conic conic_tangent_to_lines(const std::array<HomLine, 5>& lines);

// Circumscribed conic of a pentagon: through the five vertices.
Conic circumscribed_conic(const Polygon& pentagon);

// Inscribed conic of a pentagon: adjugate of the dual conic through the five
// side lines. Every side satisfies the tangency condition.
Conic inscribed_conic(const Polygon& pentagon);

struct ConicCenter {
    HomPoint point;
    bool at_infinity; // parabola case, reported rather than thrown
};

// Pole of the line at infinity with respect to the conic.
ConicCenter conic_center(const Conic& c);

// The pentagon's conic pair and derived operator R = Q_I^{-1} Q_C, a
// projective map invariant under the pentagram map and sharing the Glick
// operator's fixed-point structure.
struct PentagonConicData {
    Conic circumscribed;
    Conic inscribed;
    ProjMap r_map;
    HomPoint center_c;
    HomPoint center_i;
};

PentagonConicData pentagon_conics(const Polygon& pentagon);

ProjMap r_operator(const Polygon& pentagon);

// Pentagon of the tangency points of the sides with the inscribed conic;
// vertex i is the pole of side i. Commutes with the pentagram map.
Polygon kasner_I(const Polygon& pentagon);

inline constexpr double kConcentricTol = 1e-7;

// Whether the inscribed and circumscribed conics share their center, decided
// by the center distance relative to the circumscribed conic's scale and
// cross-checked against the affinity of the R operator (the two criteria are
// equivalent; disagreement raises InternalInconsistency).
bool is_concentric(const Polygon& pentagon, double tol_c = kConcentricTol);

} // namespace pentagram
