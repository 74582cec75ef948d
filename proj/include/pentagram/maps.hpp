#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pentagram/polygon.hpp"

namespace pentagram {

enum class MapKind { S, D };

// Pentagram map: vertex i of the image is the intersection of the diagonals
// (i-1, i+1) and (i, i+2). Preserves convexity and contracts convex polygons
// toward the orbit's limit point.
Polygon pentagram_D(const Polygon& p);

// Inverse pentagram map: vertex i of the image is the intersection of sides
// i-2 and i. This labeling is the one that makes the roundtrips
// pentagram_D(inverse_S(p)) and inverse_S(pentagram_D(p)) reproduce p with
// identical indices.
Polygon inverse_S(const Polygon& p);

enum class OrbitTermination { ReachedKmax, NonConvex, Degenerate };

struct OrbitStep {
    int k;
    bool convex;
    double d_norm;            // |d_p| of the iterate, measured in the input frame
    double d_norm_normalized; // |d_p| of the renormalized shape
    double diameter;          // diameter in the input frame
};

// Per-iteration record of an orbit run. Step 0 describes the input polygon.
// `frames` holds the centroid-inertia normalized shape of every recorded
// step, for rendering. `accumulated_normalization` maps the input frame to
// the frame of `final_polygon` (identity when no normalization was applied),
// so callers can undo the internal renormalization.
struct OrbitReport {
    std::vector<OrbitStep> steps;
    OrbitTermination terminated_reason;
    AffinePolygon final_polygon;
    ProjMap accumulated_normalization;
    std::vector<AffinePolygon> frames;
};

// Iterates the chosen map up to k_max times starting from a convex polygon.
// Statistics are evaluated in the input frame, so they do not depend on the
// renormalize flag. Inverse-map orbits grow geometrically, so they are
// renormalized internally after k = 5 even when renormalize is off.
OrbitReport orbit(const AffinePolygon& p, MapKind map, int k_max, bool renormalize);

// Shrinks a convex polygon with the pentagram map until its diameter (in the
// input frame) drops below diameter_tol, then returns the vertex centroid.
// Iterates are recentred and rescaled internally for conditioning; the
// returned point is expressed in the input frame. Throws
// MaxIterationsExceeded after 10000 steps.
Vec2 limit_point_by_shrinking(const AffinePolygon& p, double diameter_tol);

inline constexpr int kLimitPointMaxIterations = 10000;

// Applied to the renormalized iterate after each step of a horizon run (used
// for on-the-variety re-projection).
using StepTransform = std::function<AffinePolygon(const AffinePolygon&)>;

// Smallest k <= k_max with S^k(p) non-convex; nullopt when the whole run
// stays convex. Throws DegenerateOrbit if an iterate degenerates while still
// convex.
std::optional<int> convexity_horizon(const AffinePolygon& p, int k_max,
                                     const StepTransform& post_step = nullptr);

// Same horizon, decided through the dual criterion: S^k(p) is convex exactly
// when the pentagram orbit of the dual polygon still contains the line at
// infinity (as a dual-plane point) in its interior. The polygon is first
// translated so its centroid, the chart point, is the origin.
std::optional<int> convexity_horizon_dual(const AffinePolygon& p, int k_max);

} // namespace pentagram
