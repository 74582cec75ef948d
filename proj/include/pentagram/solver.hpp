#pragma once

#include <cstdint>
#include <vector>

#include "pentagram/polygon.hpp"

namespace pentagram {

struct SolveReport {
    AffinePolygon result;
    int iterations;
    double final_residual; // |d_p| / scale on the result
    int moved_vertex;
    double displacement; // how far the moved vertex travelled
};

// Projects a strictly convex polygon onto the variety d_p = 0 by a damped
// 2-DOF Newton iteration in the coordinates of one vertex (all others
// frozen). The Jacobian is a central finite difference with step
// 1e-6 * diameter; steps are halved until strict convexity is preserved.
// vertex_index = -1 probes all vertices once and picks the one whose local
// Jacobian has the largest smallest singular value.
SolveReport project_to_variety(const AffinePolygon& p, int vertex_index, double tol);

// Projection with retries: the auto-selected vertex first, then every other
// vertex. Throws NoConvergence when no vertex chart reaches the variety.
SolveReport project_any_vertex(const AffinePolygon& p, double tol);

// Draws random convex n-gons and projects each onto the variety (retrying
// with other vertices on failure, then resampling with a derived seed).
// Throws ExhaustedAttempts after 10 * count resamples.
std::vector<AffinePolygon> sample_variety(int n, int count, std::uint64_t rng_seed, double tol);

inline constexpr int kNewtonMaxIterations = 50;
inline constexpr int kMaxDampingHalvings = 20;

} // namespace pentagram
