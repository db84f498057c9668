#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinaltri/polytope.hpp"
#include "spinaltri/spine.hpp"

namespace spinaltri {

// Points of R^{ns} are n x s matrices flattened row-major: entry (i, j) sits at i*s + j.

struct EverestParams {
    std::size_t n = 1;
    std::size_t s = 1;

    /// Throws Error unless n >= 1 and s >= 1.
    static EverestParams make(std::size_t n, std::size_t s);
    std::size_t dim() const { return n * s; }
};

/// g_{n,s}(x) with its ingredients: column maxima m_j = max(0, x_{1j}, ..., x_{nj}),
/// negated row sums s_i, and m = max(0, s_1, ..., s_n).
struct GEvaluation {
    Rational value;
    std::vector<Rational> column_max;
    std::vector<Rational> neg_row_sum;
    Rational m;
};

GEvaluation g_detail(const EverestParams& params, const QVector& x);
Rational g_eval(const EverestParams& params, const QVector& x);
bool everest_membership(const EverestParams& params, const QVector& x);

/// j-th unit row vector of length s (1-based), with unit_row(s, 0) = 0.
QVector unit_row(std::size_t s, std::size_t j);

enum class FamilyKind { MinusOne, Zero, One, EverestVertices };

std::string to_string(FamilyKind kind);

struct VertexFamily {
    FamilyKind kind;
    std::vector<QVector> points;
};

struct VertexFamilies {
    VertexFamily minus_one;  // rows -e_s(j_i); tuples (j_1..j_n) in lexicographic order
    VertexFamily zero;       // all rows -e_s(j), j = 0..s
    VertexFamily one;        // {v - u : v in V_-1, u in V_0 \ {0}}, lexicographically sorted
    VertexFamily everest;    // (V_1 u V_-1) \ {0}: V_-1 part first, then the rest of V_1
};

VertexFamilies vertex_families(const EverestParams& params);

/// Membership tests phrased entry-wise (entries in {-1,0}, at most one -1 per row, ...).
bool matches_minus_one_rules(const EverestParams& params, const QVector& x);
bool matches_zero_rules(const EverestParams& params, const QVector& x);
bool matches_one_rules(const EverestParams& params, const QVector& x);

/// Cardinalities predicted for each family.
std::size_t expected_minus_one_size(const EverestParams& params);
std::size_t expected_zero_size(const EverestParams& params);
std::size_t expected_one_size(const EverestParams& params);
std::size_t expected_everest_size(const EverestParams& params);

/// Polytope on the everest vertex family. Throws ScaleError when ns > 6
/// (without the scale override) and InternalError if a claimed vertex has g != 1.
Polytope everest_polytope(const EverestParams& params);

/// Product of n copies of conv(0, -e_s(1), ..., -e_s(s)); vertices in V_-1 order.
Polytope simplotope(std::size_t n, std::size_t s);

/// Indices of V_0 inside simplotope(n, s).
IndexSet simplotope_spine_indices(std::size_t n, std::size_t s);

/// The ns x (n+1)s matrix (I_ns | -I_s; ...; -I_s).
QMatrix se_matrix(const EverestParams& params);

struct SeSquare {
    QMatrix square;      // se_matrix stacked over (0 | I_s)
    QMatrix projection;  // (I_ns | 0)
};

/// Throws InternalError if projection * square != se_matrix or if the image
/// of V_0(n+1, s) under square fails to span the kernel of projection.
SeSquare se_square_matrices(const EverestParams& params);

/// ((n+1)s)! / ((ns)! (s!)^{n+1}).
Rational c_constant(const EverestParams& params);

/// Multinomial form: ((n+1)s)! / ((s!)^{n+1}) / (ns)!, computed as a product of binomials.
Rational c_constant_multinomial(const EverestParams& params);

enum class VolumeMethod { Formula, Hull, Lifting };

/// Formula: c_constant. Hull: pulling triangulation of everest_polytope.
/// Lifting: vol(square * S_{n+1,s}) rescaled by the volume relation with the
/// transformed V_0 as spine.
Rational everest_volume(const EverestParams& params, VolumeMethod method);

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Every identity for (n, s): family sizes and rules, g on vertices, the
/// simplotope/Everest image identity, kernel span, square extension, and
/// (when ns <= 4) hull volume and lifting volume against the formula.
std::vector<NamedCheck> verify_everest(const EverestParams& params);

}  // namespace spinaltri
