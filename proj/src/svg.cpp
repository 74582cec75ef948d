#include "pentagram/svg.hpp"

#include <cstdio>

#include "pentagram/polygon_io.hpp"

namespace pentagram {

namespace {

constexpr int kCell = 256;
constexpr double kWindow = 3.0; // world [-3, 3] maps onto one cell

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

std::string orbit_svg(const std::vector<AffinePolygon>& frames) {
    const int count = static_cast<int>(frames.size());
    const int width = kCell * (count > 0 ? count : 1);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(kCell) + "\">\n";
    for (int f = 0; f < count; ++f) {
        out += "<svg x=\"" + std::to_string(f * kCell) +
               "\" y=\"0\" width=\"256\" height=\"256\" viewBox=\"0 0 256 256\">\n";
        out += "<rect x=\"0.5\" y=\"0.5\" width=\"255\" height=\"255\" fill=\"none\" "
               "stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        out += "<polygon points=\"";
        bool first = true;
        for (const Vec2& p : frames[f].points()) {
            const double px = (p.x() + kWindow) / (2.0 * kWindow) * kCell;
            const double py = (kWindow - p.y()) / (2.0 * kWindow) * kCell;
            if (!first)
                out += " ";
            out += fmt(px) + "," + fmt(py);
            first = false;
        }
        out += "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        out += "</svg>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_orbit_svg(const std::string& path, const std::vector<AffinePolygon>& frames) {
    write_file_atomic(path, orbit_svg(frames));
}

} // namespace pentagram
