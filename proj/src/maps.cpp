#include "pentagram/maps.hpp"

#include <cmath>

#include "pentagram/glick.hpp"

namespace pentagram {

Polygon pentagram_D(const Polygon& p) {
    const int n = p.size();
    std::vector<HomPoint> w;
    w.reserve(n);
    try {
        for (int i = 0; i < n; ++i) {
            const HomLine d1 = join(p.vertex(i - 1), p.vertex(i + 1));
            const HomLine d2 = join(p.vertex(i), p.vertex(i + 2));
            w.push_back(meet(d1, d2));
        }
        return Polygon(std::move(w));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CoincidentLines || e.code() == ErrorCode::CoincidentPoints)
            throw Error(ErrorCode::DegeneratePolygon, "coincident shortest diagonals");
        throw;
    }
}

Polygon inverse_S(const Polygon& p) {
    const int n = p.size();
    std::vector<HomPoint> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i)
        w.push_back(meet(p.side(i - 2), p.side(i)));
    return Polygon(std::move(w));
}

namespace {

Polygon step_map(MapKind map, const Polygon& p) {
    return map == MapKind::S ? inverse_S(p) : pentagram_D(p);
}

std::vector<Vec2> mapped_back(const std::vector<Vec2>& pts, const ProjMap& undo) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const Vec2& q : pts)
        out.push_back(apply(undo, HomPoint::from_affine(q)).to_affine());
    return out;
}

} // namespace

OrbitReport orbit(const AffinePolygon& start, MapKind map, int k_max, bool renormalize) {
    if (k_max < 1)
        throw Error(ErrorCode::InvalidInput, "k_max must be at least 1");
    if (!is_convex(start))
        throw Error(ErrorCode::InvalidInput, "orbit needs a convex start polygon");

    std::vector<OrbitStep> steps;
    std::vector<AffinePolygon> frames;
    OrbitTermination reason = OrbitTermination::ReachedKmax;

    AffinePolygon current = start;
    ProjMap acc = ProjMap::identity(); // input frame -> current frame

    const auto record = [&](int k, bool convex, const AffinePolygon& shape_current_frame) {
        // Statistics live in the input frame; the undo map restores it.
        const ProjMap undo = acc.inverse();
        const AffinePolygon original =
            AffinePolygon::from_points(mapped_back(shape_current_frame.points(), undo));
        const auto d = d_vector_signed(original);
        const auto dn = d_vector_signed(shape_current_frame);
        if (!d || !dn)
            return false;
        steps.push_back({k, convex, d->norm(), dn->norm(), original.diameter()});
        try {
            frames.push_back(centroid_inertia_normalize(shape_current_frame).first);
        } catch (const Error&) {
            // non-finite or flat shape; statistics row stands on its own
        }
        return true;
    };

    record(0, true, current);

    for (int k = 1; k <= k_max; ++k) {
        std::optional<Polygon> next;
        try {
            next = step_map(map, current.to_polygon());
        } catch (const Error&) {
            reason = OrbitTermination::Degenerate;
            break;
        }
        if (!next->all_finite()) {
            reason = OrbitTermination::NonConvex;
            break;
        }
        const AffinePolygon aff = next->to_affine();
        bool convex = false;
        try {
            convex = is_convex(aff);
        } catch (const Error&) {
            reason = OrbitTermination::Degenerate;
            break;
        }
        if (!record(k, convex, aff)) {
            reason = OrbitTermination::Degenerate;
            break;
        }
        if (!convex) {
            reason = OrbitTermination::NonConvex;
            current = aff;
            break;
        }
        // Inverse-map orbits blow up geometrically; keep the working frame
        // tame even when the caller asked for raw output.
        const bool force = map == MapKind::S && k > 5;
        if (renormalize || force) {
            auto [norm, used] = centroid_inertia_normalize(aff);
            current = norm;
            acc = used.compose(acc);
        } else {
            current = aff;
        }
    }

    return OrbitReport{std::move(steps), reason, std::move(current), acc, std::move(frames)};
}

Vec2 limit_point_by_shrinking(const AffinePolygon& p, double diameter_tol) {
    if (!(diameter_tol > 0.0))
        throw Error(ErrorCode::InvalidInput, "diameter_tol must be positive");
    if (!is_convex(p))
        throw Error(ErrorCode::InvalidInput, "limit point needs a convex polygon");

    std::vector<Vec2> cur = p.points();
    Vec2 shift = Vec2::Zero();
    double scale = 1.0;

    for (int it = 0; it < kLimitPointMaxIterations; ++it) {
        const double local = diameter(cur);
        if (scale * local < diameter_tol) {
            Vec2 c = Vec2::Zero();
            for (const Vec2& q : cur)
                c += q;
            c /= static_cast<double>(cur.size());
            return shift + scale * c;
        }
        // Recentre and rescale (a similarity, tracked and undone at the end)
        // so the shrinking iterates stay conditioned.
        Vec2 c = Vec2::Zero();
        for (const Vec2& q : cur)
            c += q;
        c /= static_cast<double>(cur.size());
        for (Vec2& q : cur)
            q = (q - c) / local;
        shift += scale * c;
        scale *= local;

        std::vector<HomPoint> hom;
        hom.reserve(cur.size());
        for (const Vec2& q : cur)
            hom.push_back(HomPoint::from_affine(q));
        const Polygon next = pentagram_D(Polygon(std::move(hom)));
        cur.clear();
        for (int i = 0; i < next.size(); ++i)
            cur.push_back(next.vertex(i).to_affine());
    }
    throw Error(ErrorCode::MaxIterationsExceeded, "pentagram orbit did not shrink enough");
}

std::optional<int> convexity_horizon(const AffinePolygon& p, int k_max,
                                     const StepTransform& post_step) {
    if (!is_convex(p))
        throw Error(ErrorCode::InvalidInput, "horizon needs a convex start polygon");
    AffinePolygon current = centroid_inertia_normalize(p).first;
    for (int k = 1; k <= k_max; ++k) {
        Polygon next = [&] {
            try {
                return inverse_S(current.to_polygon());
            } catch (const Error&) {
                throw Error(ErrorCode::DegenerateOrbit, "inverse map degenerated while convex");
            }
        }();
        if (!next.all_finite())
            return k; // a vertex left the chart: not convex there
        const AffinePolygon aff = next.to_affine();
        bool convex = false;
        try {
            convex = is_convex(aff);
        } catch (const Error&) {
            throw Error(ErrorCode::DegenerateOrbit, "iterate degenerated while convex");
        }
        if (!convex)
            return k;
        current = centroid_inertia_normalize(aff).first;
        if (post_step)
            current = post_step(current);
    }
    return std::nullopt;
}

std::optional<int> convexity_horizon_dual(const AffinePolygon& p, int k_max) {
    if (!is_convex(p))
        throw Error(ErrorCode::InvalidInput, "horizon needs a convex start polygon");
    // Chart point for the dual plane: the centroid, moved to the origin.
    const Vec2 c = p.centroid();
    std::vector<Vec2> shifted;
    shifted.reserve(p.size());
    for (const Vec2& q : p.points())
        shifted.push_back(q - c);
    Polygon dual = dual_polygon(AffinePolygon::from_points(std::move(shifted)).to_polygon());

    for (int k = 1; k <= k_max; ++k) {
        try {
            dual = pentagram_D(dual);
        } catch (const Error&) {
            throw Error(ErrorCode::DegenerateOrbit, "dual orbit degenerated");
        }
        if (!dual.all_finite())
            return k;
        const AffinePolygon aff = dual.to_affine();
        bool inside = false;
        try {
            inside = is_convex(aff) && contains_point_strict(aff, Vec2::Zero());
        } catch (const Error&) {
            throw Error(ErrorCode::DegenerateOrbit, "dual iterate degenerated");
        }
        if (!inside)
            return k;
    }
    return std::nullopt;
}

} // namespace pentagram
