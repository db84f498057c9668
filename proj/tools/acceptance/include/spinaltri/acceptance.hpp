#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "spinaltri/polytope.hpp"
#include "spinaltri/triangulation.hpp"

namespace spinaltri {

namespace fixtures {

/// {0,1}^d, vertex k has coordinate i equal to bit i of k (so 0 and 2^d - 1 are antipodal).
std::vector<QVector> hypercube(std::size_t d);

/// 0 and the d unit vectors.
std::vector<QVector> standard_simplex(std::size_t d);

/// Random integer points in [-r, r]^d reduced to their extreme points; retries
/// until the hull is d-dimensional with at least d+1 vertices.
std::vector<QVector> random_polytope(std::mt19937_64& rng, std::size_t d, std::size_t max_points, long r);

/// The 20 vertices of the projected 4th Birkhoff polytope (reference list), each a 2x3 matrix.
const std::vector<std::array<std::array<int, 3>, 2>>& projected_b4_golden();

}  // namespace fixtures

/// Distinct star triangulations of `points` (which contain 0) reachable by
/// varying the pulling order: every permutation when there are at most 7
/// points, otherwise `samples` random orders.
std::vector<Triangulation> star_triangulations_by_order(const std::vector<QVector>& points, std::size_t samples,
                                                        std::uint64_t seed);

namespace acceptance {

struct Outcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriteria = 10;

/// Runs one criterion (1..kCriteria). Exceptions become a failed outcome.
Outcome run_criterion(int id);

std::vector<Outcome> run_all();

/// "PASS  3  SE-transformation ... (0.12 s): detail"
std::string format(const Outcome& o);

}  // namespace acceptance
}  // namespace spinaltri
