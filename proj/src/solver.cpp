#include "pentagram/solver.hpp"

#include <cmath>

#include "pentagram/glick.hpp"

namespace pentagram {

namespace {

Vec2 residual(const std::vector<Vec2>& pts) {
    const auto d = d_vector_signed(AffinePolygon::from_points(pts));
    if (!d)
        throw Error(ErrorCode::DegeneratePolygon, "triangle area degenerated during solve");
    return *d;
}

double residual_scale(const std::vector<Vec2>& pts) {
    return d_vector_scale(AffinePolygon::from_points(pts));
}

bool convex_quiet(const std::vector<Vec2>& pts) {
    try {
        return is_convex(AffinePolygon::from_points(pts));
    } catch (const Error&) {
        return false;
    }
}

Mat2 fd_jacobian(std::vector<Vec2> pts, int j, double h) {
    Mat2 jac;
    for (int c = 0; c < 2; ++c) {
        const double saved = pts[j][c];
        pts[j][c] = saved + h;
        const Vec2 fp = residual(pts);
        pts[j][c] = saved - h;
        const Vec2 fm = residual(pts);
        pts[j][c] = saved;
        jac.col(c) = (fp - fm) / (2.0 * h);
    }
    return jac;
}

double smallest_singular_value(const Mat2& m) {
    // closed form for 2x2
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const double s1 = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double s2 = std::sqrt(std::max(0.0, s1 * s1 - 4.0 * det * det));
    return std::sqrt(std::max(0.0, (s1 - s2) / 2.0));
}

int best_vertex(const std::vector<Vec2>& pts, double h) {
    int best = 0;
    double best_sv = -1.0;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
        const double sv = smallest_singular_value(fd_jacobian(pts, j, h));
        if (sv > best_sv) {
            best_sv = sv;
            best = j;
        }
    }
    return best;
}

} // namespace

SolveReport project_to_variety(const AffinePolygon& p, int vertex_index, double tol) {
    if (!(tol > 0.0))
        throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
    if (!is_convex(p))
        throw Error(ErrorCode::InvalidInput, "solver needs a strictly convex polygon");
    const int n = p.size();
    if (vertex_index < -1 || vertex_index >= n)
        throw Error(ErrorCode::InvalidInput, "vertex index out of range");

    std::vector<Vec2> pts = p.points();
    const double h = 1e-6 * p.diameter();
    const int j = vertex_index == -1 ? best_vertex(pts, h) : vertex_index;
    const Vec2 original = pts[j];

    for (int it = 0; it <= kNewtonMaxIterations; ++it) {
        const Vec2 f = residual(pts);
        const double rel = f.norm() / residual_scale(pts);
        if (rel <= tol) {
            return SolveReport{AffinePolygon::from_points(pts), it, rel, j,
                               (pts[j] - original).norm()};
        }
        if (it == kNewtonMaxIterations)
            break;
        const Mat2 jac = fd_jacobian(pts, j, h);
        const double det = jac.determinant();
        if (std::abs(det) <= 1e-14 * jac.cwiseAbs().maxCoeff() * jac.cwiseAbs().maxCoeff())
            throw Error(ErrorCode::NoConvergence, "singular Newton Jacobian");
        const Vec2 step = -jac.inverse() * f;

        bool accepted = false;
        double t = 1.0;
        for (int half = 0; half <= kMaxDampingHalvings; ++half, t *= 0.5) {
            std::vector<Vec2> trial = pts;
            trial[j] += t * step;
            if (convex_quiet(trial)) {
                pts = std::move(trial);
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw Error(ErrorCode::ConvexityLost, "no damped step keeps the polygon convex");
    }
    throw Error(ErrorCode::NoConvergence, "Newton iteration limit reached");
}

SolveReport project_any_vertex(const AffinePolygon& p, double tol) {
    const int n = p.size();
    try {
        return project_to_variety(p, -1, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInput)
            throw;
    }
    for (int j = 0; j < n; ++j) {
        try {
            return project_to_variety(p, j, tol);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidInput)
                throw;
        }
    }
    throw Error(ErrorCode::NoConvergence, "no vertex chart reached the variety");
}

std::vector<AffinePolygon> sample_variety(int n, int count, std::uint64_t rng_seed, double tol) {
    if (count < 1)
        throw Error(ErrorCode::InvalidInput, "count must be at least 1");
    std::vector<AffinePolygon> out;
    out.reserve(count);
    long attempts = 0;
    const long max_attempts = 10L * count;
    while (static_cast<int>(out.size()) < count) {
        if (attempts >= max_attempts)
            throw Error(ErrorCode::ExhaustedAttempts, "too many failed projection attempts");
        const AffinePolygon p = random_convex_polygon(n, rng_seed + static_cast<std::uint64_t>(attempts));
        ++attempts;
        try {
            out.push_back(project_any_vertex(p, tol).result);
        } catch (const Error&) {
            // resample with the next derived seed
        }
    }
    return out;
}

} // namespace pentagram
