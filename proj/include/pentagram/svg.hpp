#pragma once

#include <string>
#include <vector>

#include "pentagram/polygon.hpp"

namespace pentagram {

// Strip of stroke-only frames, one normalized polygon per 256x256 cell.
// Frames are expected in centroid-inertia normalized coordinates; the window
// [-3, 3]^2 is mapped to each cell. Output is byte-stable for identical
// input.
std::string orbit_svg(const std::vector<AffinePolygon>& frames);

void write_orbit_svg(const std::string& path, const std::vector<AffinePolygon>& frames);

} // namespace pentagram
