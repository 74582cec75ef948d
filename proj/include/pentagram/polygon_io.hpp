#pragma once

#include <string>

#include "pentagram/polygon.hpp"

namespace pentagram {

// Polygon file format: {"vertices": [[x, y], ...]} with at least 5 pairs.
AffinePolygon polygon_from_json(const std::string& text);
std::string polygon_to_json(const AffinePolygon& p);

AffinePolygon read_polygon_file(const std::string& path);
void write_polygon_file(const std::string& path, const AffinePolygon& p);

// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace pentagram
