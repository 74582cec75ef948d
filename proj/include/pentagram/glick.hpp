#pragma once

#include <optional>
#include <vector>

#include "pentagram/polygon.hpp"
#include "pentagram/projective.hpp"

namespace pentagram {

// Per-polygon data of the d-vector construction and the Glick operator.
//
// For an affine polygon with vertices v_i (counter-clockwise), d_i is the
// vector from v_{i-1} to v_{i+1} and A_i the (positive) area of triangle
// (v_{i-1}, v_i, v_{i+1}). The d-vector is sum(d_i / A_i); it vanishes
// exactly on the polygons whose entire inverse-pentagram orbit stays convex.
//
// The Glick operator G(v) = n v - sum_i (det(v_{i-1}, v, v_{i+1}) /
// det(v_{i-1}, v_i, v_{i+1})) v_i is stored with exactly this normalization;
// rescaling any vertex representative leaves the matrix unchanged, and the
// pentagon identity against the pentagram map needs the raw scale, so the
// matrix must not be renormalized.
struct GlickData {
    std::vector<Vec2> d_vectors;
    std::vector<double> areas;
    Vec2 d_p;
    ProjMap matrix;
    HomLine infinity_preimage;
    // z-coefficient of the preimage of the line at infinity, written as
    // det([x y], d_p) = z * W with true triangle areas: W = 2n + sum_i
    // det(v_{i-1}, v_{i+1}) / A_i. Positive whenever the origin lies in the
    // polygon's interior. The stored covector is (d_p.y, -d_p.x, -W) up to a
    // positive factor, so it shares the matrix's third row projectively.
    double infinity_z_coefficient;
    // Dimensional reference sum(|d_i| / A_i) for relative d_p comparisons.
    double scale;
};

GlickData glick_data(const AffinePolygon& p);

// sum(d_i / A_i); requires a strictly convex polygon (internally oriented
// counter-clockwise). Throws DegeneratePolygon when some A_i is below
// tolerance relative to the squared diameter.
Vec2 d_vector(const AffinePolygon& p);

// sum(|d_i| / A_i), the scale that makes |d_p| comparisons dimensionless.
double d_vector_scale(const AffinePolygon& p);

// Signed-area variant for orbit reporting: valid for non-convex polygons,
// nullopt when a triangle area degenerates.
std::optional<Vec2> d_vector_signed(const AffinePolygon& p);

// Relative residual |d_p| / scale, the quantity driven to zero by the
// variety solver. Default threshold for "d_p = 0" decisions.
inline constexpr double kDpZeroTol = 1e-9;
double d_vector_relative(const AffinePolygon& p);

// The operator matrix; defined for any polygon without three consecutive
// collinear vertices. May be rank-deficient (it has a kernel for highly
// symmetric polygons), which is fine: it is used as an operator, not
// inverted.
ProjMap glick_matrix(const Polygon& p);

// Preimage of the line at infinity under the Glick operator, computed from
// the affine d-vector formulas (an independent route from the matrix's third
// row, with which it agrees projectively).
HomLine infinity_preimage_line(const AffinePolygon& p);

// Whether the Glick operator, as a projective map, is affine. For convex
// polygons this is equivalent to |d_p| = 0 within tolerance.
bool glick_is_affine(const Polygon& p);

// The unique fixed point of the Glick operator inside the convex hull of a
// convex polygon (the limit point of the pentagram orbit). Eigenvalues come
// from the closed-form cubic; eigenvectors from null-space extraction with
// one inverse-iteration polish. Near-coincident eigenvalues fall back to
// iterating G^2 from the centroid, which converges by the contraction
// property.
HomPoint glick_fixed_point(const Polygon& p);

} // namespace pentagram
