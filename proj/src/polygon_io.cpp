#include "pentagram/polygon_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pentagram {

AffinePolygon polygon_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorCode::InvalidInput, "expected an object with a \"vertices\" array");
    std::vector<Vec2> pts;
    for (const auto& entry : doc["vertices"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw Error(ErrorCode::InvalidInput, "each vertex must be a pair of numbers");
        pts.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return AffinePolygon::from_points(std::move(pts));
}

std::string polygon_to_json(const AffinePolygon& p) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Vec2& q : p.points())
        vertices.push_back({q.x(), q.y()});
    nlohmann::json doc;
    doc["vertices"] = vertices;
    return doc.dump(2) + "\n";
}

AffinePolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return polygon_from_json(buf.str());
}

void write_polygon_file(const std::string& path, const AffinePolygon& p) {
    write_file_atomic(path, polygon_to_json(p));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::InvalidInput, "cannot write " + tmp);
        out << content;
        if (!out)
            throw Error(ErrorCode::InvalidInput, "write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error(ErrorCode::InvalidInput, "rename failed for " + path + ": " + ec.message());
}

} // namespace pentagram
