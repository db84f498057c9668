#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <random>

#include "spinaltri/acceptance.hpp"
#include "spinaltri/errors.hpp"
#include "spinaltri/io.hpp"
#include "support.hpp"

using namespace spinaltri;
using namespace testing_support;

TEST_CASE("polytope documents") {
    const Polytope p = parse_polytope_json(R"({"ambient_dim": 2, "vertices": [["0", "0"], ["1/2", 0], [0, "3/4"]]})");
    CHECK(p.size() == 3);
    CHECK(p.vertex(1) == QVector{Rational(1, 2), Rational(0)});
    CHECK(p.vertex(2) == QVector{Rational(0), Rational(3, 4)});
    CHECK(polytope_to_json(p) == R"({"ambient_dim":2,"vertices":[["0","0"],["1/2","0"],["0","3/4"]]})");
    CHECK(parse_points_json(R"({"vertices": [[1, 2], [3, 4]]})") == points({{1, 2}, {3, 4}}));
}

TEST_CASE("polytope documents round trip") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = fixtures::random_polytope(rng, 3, 8, 4);
        const Polytope p = Polytope::make(pts);
        const Polytope q = parse_polytope_json(polytope_to_json(p, 2));
        CHECK(q.vertices() == p.vertices());
        CHECK(parse_points_json(points_to_json(pts)) == pts);
    }
}

TEST_CASE("malformed polytope documents") {
    CHECK_THROWS_AS(parse_polytope_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json("[]"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": 3})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [1, 2]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [["x"]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [["1/0"]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [[0.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"ambient_dim": -1, "vertices": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"ambient_dim": 2, "vertices": [[1]]})"), DimensionError);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [[0, 0], [0, 0]]})"), DuplicatePoint);
    CHECK_THROWS_AS(parse_polytope_json(R"({"vertices": [[0], [1], [2]]})"), NotInConvexPosition);
}

TEST_CASE("triangulation documents") {
    const auto table = std::make_shared<const std::vector<QVector>>(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    const Triangulation t = parse_triangulation_json(R"({"dim": 2, "simplices": [[3, 2, 1], [0, 1, 2]]})", table);
    CHECK(t.simplices() == std::vector<Simplex>{{0, 1, 2}, {1, 2, 3}});
    CHECK(triangulation_to_json(t) == R"({"dim":2,"simplices":[[0,1,2],[1,2,3]]})");
    CHECK(parse_triangulation_json(triangulation_to_json(t), table) == t);
    CHECK(parse_triangulation_json(R"({"simplices": [[0, 1, 2]]})", table).dim() == 2);
    CHECK_THROWS_AS(parse_triangulation_json(R"({"simplices": [[0, 1, 4]]})", table), ParseError);
    CHECK_THROWS_AS(parse_triangulation_json(R"({"simplices": [[0, -1, 2]]})", table), ParseError);
    CHECK_THROWS_AS(parse_triangulation_json(R"({"dim": 2, "simplices": [[0, 1]]})", table), ParseError);
    CHECK_THROWS_AS(parse_triangulation_json(R"({"dim": 1})", table), ParseError);
}

TEST_CASE("files") {
    const std::string path = "io_test_cube.json";
    {
        std::ofstream out(path);
        out << polytope_to_json(Polytope::make(fixtures::hypercube(3)));
    }
    CHECK(load_polytope(path).size() == 8);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_polytope("does/not/exist.json"), Error);
}
