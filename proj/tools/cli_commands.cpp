#include "cli_commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "pentagram/conics.hpp"
#include "pentagram/glick.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/polygon.hpp"
#include "pentagram/polygon_io.hpp"
#include "pentagram/solver.hpp"
#include "pentagram/svg.hpp"
#include "pentagram/tolerance.hpp"

namespace pentagram::cli {

namespace {

std::string num(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

AffinePolygon load_input(const Options& opts) {
    if (opts.random_n) {
        if (*opts.random_n < 5)
            throw Error(ErrorCode::InvalidInput, "n must be at least 5");
        return random_convex_polygon(*opts.random_n, opts.seed);
    }
    if (opts.input_file.empty())
        throw Error(ErrorCode::InvalidInput, "no input polygon: give a file or --random <n>");
    return read_polygon_file(opts.input_file);
}

std::string horizon_text(const std::optional<int>& h) {
    return h ? std::to_string(*h) : std::string("survived");
}

} // namespace

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidInput:
            return 1;
        case ErrorCode::NoConvergence:
        case ErrorCode::ConvexityLost:
        case ErrorCode::ExhaustedAttempts:
        case ErrorCode::MaxIterationsExceeded:
            return 3;
        default:
            return 2;
    }
}

int run_check(const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        set_tolerance(opts.tol);
        const AffinePolygon p = load_input(opts);
        if (!is_convex(p)) {
            err << "input polygon is not convex\n";
            return 2;
        }
        const GlickData gd = glick_data(p);
        out << "n: " << p.size() << "\n";
        out << "d_norm: " << num(gd.d_p.norm()) << "\n";
        out << "d_norm_relative: " << num(gd.d_p.norm() / gd.scale) << "\n";
        out << "glick_affine: " << (is_affine(gd.matrix) ? "true" : "false") << "\n";
        out << "horizon: " << horizon_text(convexity_horizon(p, opts.k_max)) << "\n";
        if (p.size() == 5) {
            const Polygon pent = p.to_polygon();
            const PentagonConicData pc = pentagon_conics(pent);
            const bool conc = is_concentric(pent);
            const Vec2 cc = pc.center_c.to_affine();
            const Vec2 ci = pc.center_i.to_affine();
            double mean_sq = 0.0;
            for (const Vec2& q : p.points())
                mean_sq += (q - cc).squaredNorm();
            const double scale = std::sqrt(mean_sq / p.size());
            out << "concentric: " << (conc ? "true" : "false") << "\n";
            out << "center_distance: " << num((cc - ci).norm()) << "\n";
            out << "center_distance_relative: " << num((cc - ci).norm() / scale) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_orbit(const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        set_tolerance(opts.tol);
        const AffinePolygon p = load_input(opts);
        MapKind kind;
        if (opts.map == "S" || opts.map == "s")
            kind = MapKind::S;
        else if (opts.map == "D" || opts.map == "d")
            kind = MapKind::D;
        else
            throw Error(ErrorCode::InvalidInput, "map must be S or D");

        const OrbitReport rep = orbit(p, kind, opts.k_max, opts.renormalize);

        if (!opts.csv_path.empty()) {
            std::string csv = "k,convex,d_norm,diameter\n";
            for (const OrbitStep& s : rep.steps) {
                csv += std::to_string(s.k);
                csv += s.convex ? ",true," : ",false,";
                csv += num(s.d_norm, "%.17g");
                csv += ",";
                csv += num(s.diameter, "%.17g");
                csv += "\n";
            }
            write_file_atomic(opts.csv_path, csv);
        }
        if (!opts.svg_path.empty())
            write_orbit_svg(opts.svg_path, rep.frames);

        out << "steps: " << rep.steps.size() << "\n";
        out << "terminated: ";
        switch (rep.terminated_reason) {
            case OrbitTermination::ReachedKmax: out << "reached_kmax\n"; break;
            case OrbitTermination::NonConvex: out << "nonconvex\n"; break;
            case OrbitTermination::Degenerate: out << "degenerate\n"; break;
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_solve(const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        set_tolerance(1e-9);
        const AffinePolygon p = load_input(opts);
        const SolveReport rep = project_to_variety(p, -1, opts.tol);
        const std::string json = polygon_to_json(rep.result);
        if (!opts.out_path.empty())
            write_file_atomic(opts.out_path, json);
        else
            out << json;
        out << "iterations: " << rep.iterations << "\n";
        out << "residual: " << num(rep.final_residual) << "\n";
        out << "moved_vertex: " << rep.moved_vertex << "\n";
        out << "displacement: " << num(rep.displacement) << "\n";
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_experiment(const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        set_tolerance(1e-9);
        if (opts.n < 5)
            throw Error(ErrorCode::InvalidInput, "n must be at least 5");
        if (opts.trials < 1)
            throw Error(ErrorCode::InvalidInput, "trials must be at least 1");
        const bool reproject = opts.reproject.value_or(opts.k_max > 10);

        std::string csv = "trial,arm,seed,d_norm,horizon,status\n";
        std::vector<int> random_h, variety_h, reproj_h;
        const int survived_value = opts.k_max + 1;

        const auto horizon_of = [&](const AffinePolygon& q,
                                    const StepTransform& post) -> std::optional<std::optional<int>> {
            try {
                return convexity_horizon(q, opts.k_max, post);
            } catch (const Error&) {
                return std::nullopt; // degenerate orbit
            }
        };

        for (int t = 0; t < opts.trials; ++t) {
            const std::uint64_t seed_t = opts.seed + static_cast<std::uint64_t>(t);
            const AffinePolygon poly = random_convex_polygon(opts.n, seed_t);
            const std::string seed_text = std::to_string(seed_t);

            const double d0 = d_vector(poly).norm();
            if (auto h = horizon_of(poly, nullptr)) {
                random_h.push_back(h->value_or(survived_value));
                csv += std::to_string(t) + ",random," + seed_text + "," + num(d0, "%.17g") + "," +
                       horizon_text(*h) + ",ok\n";
            } else {
                csv += std::to_string(t) + ",random," + seed_text + "," + num(d0, "%.17g") +
                       ",,degenerate\n";
            }

            std::optional<AffinePolygon> projected;
            try {
                projected = project_any_vertex(poly, opts.tol).result;
            } catch (const Error&) {
            }
            if (!projected) {
                csv += std::to_string(t) + ",variety," + seed_text + ",,,solve_failed\n";
                continue;
            }
            const double d1 = d_vector(*projected).norm();
            if (auto h = horizon_of(*projected, nullptr)) {
                variety_h.push_back(h->value_or(survived_value));
                csv += std::to_string(t) + ",variety," + seed_text + "," + num(d1, "%.17g") +
                       "," + horizon_text(*h) + ",ok\n";
            } else {
                csv += std::to_string(t) + ",variety," + seed_text + "," + num(d1, "%.17g") +
                       ",,degenerate\n";
            }
            if (reproject) {
                const StepTransform transform = [&](const AffinePolygon& q) {
                    return project_any_vertex(q, opts.tol).result;
                };
                try {
                    const auto h = convexity_horizon(*projected, opts.k_max, transform);
                    reproj_h.push_back(h.value_or(survived_value));
                    csv += std::to_string(t) + ",variety_reprojected," + seed_text + "," +
                           num(d1, "%.17g") + "," + horizon_text(h) + ",ok\n";
                } catch (const Error&) {
                    csv += std::to_string(t) + ",variety_reprojected," + seed_text + "," +
                           num(d1, "%.17g") + ",,reproject_failed\n";
                }
            }
        }

        const auto median_text = [&](std::vector<int>& h) -> std::string {
            if (h.empty())
                return "";
            std::sort(h.begin(), h.end());
            const int m = h[(h.size() - 1) / 2];
            return m > opts.k_max ? "survived" : std::to_string(m);
        };
        csv += "median,random,,," + median_text(random_h) + ",summary\n";
        csv += "median,variety,,," + median_text(variety_h) + ",summary\n";
        if (reproject)
            csv += "median,variety_reprojected,,," + median_text(reproj_h) + ",summary\n";

        if (!opts.out_path.empty()) {
            write_file_atomic(opts.out_path, csv);
            out << "trials: " << opts.trials << "\n";
            out << "written: " << opts.out_path << "\n";
        } else {
            out << csv;
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

} // namespace pentagram::cli
