#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinaltri/polytope.hpp"
#include "spinaltri/triangulation.hpp"

namespace spinaltri {

// Polytope document:      {"ambient_dim": d, "vertices": [["p/q", ...], ...]}
// Triangulation document: {"dim": k, "simplices": [[i, ...], ...]}
// Rationals may also be given as JSON integers on input; output always uses strings.

/// Points of a polytope document, unvalidated beyond shape. Throws ParseError.
std::vector<QVector> parse_points_json(std::string_view text);

/// Throws ParseError on malformed input, and the Polytope::make errors otherwise.
Polytope parse_polytope_json(std::string_view text);
Polytope load_polytope(const std::string& path);

std::string polytope_to_json(const Polytope& p, int indent = -1);
std::string points_to_json(const std::vector<QVector>& points, int indent = -1);

/// Simplices must index into `points`. Throws ParseError.
Triangulation parse_triangulation_json(std::string_view text, PointTable points);
Triangulation load_triangulation(const std::string& path, PointTable points);

std::string triangulation_to_json(const Triangulation& t, int indent = -1);

std::string read_file(const std::string& path);

}  // namespace spinaltri
