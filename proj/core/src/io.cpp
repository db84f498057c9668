#include "spinaltri/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinaltri/errors.hpp"

namespace spinaltri {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_of(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("coordinates must be strings \"p/q\" or integers, got " + j.dump());
}

json point_json(const QVector& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.to_string());
    return row;
}

}  // namespace

std::vector<QVector> parse_points_json(std::string_view text) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("polytope document needs a \"vertices\" array");
    std::vector<QVector> pts;
    for (const auto& row : doc["vertices"]) {
        if (!row.is_array()) throw ParseError("each vertex must be an array of coordinates");
        QVector v(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) v[i] = rational_of(row[i]);
        pts.push_back(std::move(v));
    }
    if (doc.contains("ambient_dim")) {
        if (!doc["ambient_dim"].is_number_unsigned()) throw ParseError("\"ambient_dim\" must be a non-negative integer");
        const auto d = doc["ambient_dim"].get<std::size_t>();
        for (const auto& v : pts)
            if (v.dim() != d) throw DimensionError("vertex dimension differs from ambient_dim");
    }
    return pts;
}

Polytope parse_polytope_json(std::string_view text) { return Polytope::make(parse_points_json(text)); }

Polytope load_polytope(const std::string& path) { return parse_polytope_json(read_file(path)); }

std::string points_to_json(const std::vector<QVector>& points, int indent) {
    json doc;
    doc["ambient_dim"] = points.empty() ? 0 : points[0].dim();
    doc["vertices"] = json::array();
    for (const auto& v : points) doc["vertices"].push_back(point_json(v));
    return doc.dump(indent);
}

std::string polytope_to_json(const Polytope& p, int indent) { return points_to_json(p.vertices(), indent); }

Triangulation parse_triangulation_json(std::string_view text, PointTable points) {
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("simplices") || !doc["simplices"].is_array())
        throw ParseError("triangulation document needs a \"simplices\" array");
    std::vector<Simplex> simplices;
    for (const auto& s : doc["simplices"]) {
        if (!s.is_array()) throw ParseError("each simplex must be an array of indices");
        Simplex idx;
        for (const auto& i : s) {
            if (!i.is_number_unsigned()) throw ParseError("simplex indices must be non-negative integers");
            idx.push_back(i.get<std::size_t>());
            if (idx.back() >= points->size()) throw ParseError("simplex index " + std::to_string(idx.back()) + " out of range");
        }
        simplices.push_back(std::move(idx));
    }
    std::size_t dim = 0;
    if (doc.contains("dim")) {
        if (!doc["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a non-negative integer");
        dim = doc["dim"].get<std::size_t>();
    } else if (!simplices.empty()) {
        dim = simplices[0].size() - 1;
    }
    for (const auto& s : simplices)
        if (s.size() != dim + 1) throw ParseError("simplex size does not match \"dim\"");
    return Triangulation(std::move(points), std::move(simplices), dim);
}

Triangulation load_triangulation(const std::string& path, PointTable points) {
    return parse_triangulation_json(read_file(path), std::move(points));
}

std::string triangulation_to_json(const Triangulation& t, int indent) {
    json doc;
    doc["dim"] = t.dim();
    doc["simplices"] = t.simplices();
    return doc.dump(indent);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace spinaltri
