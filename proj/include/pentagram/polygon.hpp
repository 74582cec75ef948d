#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pentagram/projective.hpp"
#include "pentagram/rng.hpp"

namespace pentagram {

class AffinePolygon;

// Projective polygon: cyclically indexed vertex list, n >= 5. Construction
// validates that consecutive vertices are distinct and no three consecutive
// vertices are collinear.
class Polygon {
public:
    explicit Polygon(std::vector<HomPoint> vertices);

    int size() const { return static_cast<int>(v_.size()); }
    const std::vector<HomPoint>& vertices() const { return v_; }

    // Cyclic access, any integer index.
    const HomPoint& vertex(int i) const { return v_[mod(i)]; }

    // Side i joins vertices i and i+1.
    HomLine side(int i) const { return join(vertex(i), vertex(i + 1)); }

    bool all_finite(double tol = tolerance()) const;
    AffinePolygon to_affine() const; // throws PointAtInfinity

private:
    int mod(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }
    std::vector<HomPoint> v_;
};

// Affine polygon: plain coordinate list with an orientation flag
// (counter-clockwise = positive signed area). No convexity is implied.
class AffinePolygon {
public:
    static AffinePolygon from_points(std::vector<Vec2> points);

    int size() const { return static_cast<int>(p_.size()); }
    const std::vector<Vec2>& points() const { return p_; }
    const Vec2& point(int i) const { return p_[mod(i)]; }
    bool counter_clockwise() const { return ccw_; }

    Vec2 centroid() const;
    double diameter() const;

    Polygon to_polygon() const;
    AffinePolygon oriented_ccw() const; // reverses vertex order when clockwise

private:
    AffinePolygon(std::vector<Vec2> p, bool ccw) : p_(std::move(p)), ccw_(ccw) {}
    int mod(int i) const {
        const int n = size();
        return ((i % n) + n) % n;
    }
    std::vector<Vec2> p_;
    bool ccw_;
};

// Strict convexity: all turns in the same direction, none degenerate, and the
// total turning is exactly one full revolution (star polygons excluded).
// Throws DegeneratePolygon when a turn is below tolerance relative to the
// squared diameter.
bool is_convex(const AffinePolygon& p);

// Convexity of a projective polygon in the standard chart. A polygon with a
// vertex at infinity is not convex in this chart.
bool is_convex(const Polygon& p);

// Vertices of the dual polygon are the sides of p, read as points of the dual
// plane: dual vertex i = join(v_i, v_{i+1}).
// Applying it twice gives back p with indices shifted by one:
// dual(dual(p)).vertex(i) == p.vertex(i+1).
Polygon dual_polygon(const Polygon& p);

// Convexity of p in the affine chart complementary to chart_line: moves
// chart_line to the line at infinity by a projective change of coordinates
// and tests convexity there. The result does not depend on the choice of the
// normalizing map. Throws VertexOnChartLine.
bool convexity_in_chart(const Polygon& p, const HomLine& chart_line);

// A deterministic invertible map sending chart_line to the line at infinity.
// axis_hint in {0,1,2} selects the completion used for the remaining rows, so
// tests can exercise independence of the chart choice.
ProjMap chart_map(const HomLine& chart_line, int axis_hint = 0);

// Affine normalization: vertex centroid to the origin, vertex second-moment
// matrix to the identity, then a rotation placing vertex 0 on the positive
// x axis. Returns the normalized polygon and the map that was applied.
std::pair<AffinePolygon, ProjMap> centroid_inertia_normalize(const AffinePolygon& p);

// Strictly convex CCW n-gon, deterministic per seed. Vertex angles are sorted
// uniform draws with cyclic gaps >= 0.1/n, radii uniform in [0.5, 1]; draws
// are rejected until the gap constraint and strict convexity hold.
AffinePolygon random_convex_polygon(int n, std::uint64_t rng_seed);
AffinePolygon random_convex_polygon(int n, Rng& rng);

// Strict interior test by winding number, with a positive distance to every
// edge (relative tolerance on the polygon diameter).
bool contains_point_strict(const AffinePolygon& p, const Vec2& q);

// Vertex-wise projective equality.
bool polygon_proj_equal(const Polygon& a, const Polygon& b, double tol = tolerance());

// Searches the cyclic relabelings of a against b; returns the shift s with
// a.vertex(i+s) == b.vertex(i) for all i, if one exists.
std::optional<int> cyclic_shift_match(const Polygon& a, const Polygon& b,
                                      double tol = tolerance());

// Largest pairwise vertex distance.
double diameter(const std::vector<Vec2>& pts);

} // namespace pentagram
