#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "spinaltri/polytope.hpp"
#include "spinaltri/spine.hpp"

namespace spinaltri {

using Simplex = std::vector<std::size_t>;
using PointTable = std::shared_ptr<const std::vector<QVector>>;

/// Set of maximal simplices over a shared point table. Each simplex is a
/// sorted index list of length dim+1; the list itself is sorted and
/// duplicate-free, so equal triangulations compare equal.
class Triangulation {
public:
    Triangulation(PointTable points, std::vector<Simplex> simplices, std::size_t dim);

    const std::vector<QVector>& points() const { return *points_; }
    const PointTable& point_table() const { return points_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return simplices_.size(); }

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.dim_ == b.dim_ && a.simplices_ == b.simplices_ && *a.points_ == *b.points_;
    }

private:
    PointTable points_;
    std::vector<Simplex> simplices_;
    std::size_t dim_;
};

/// Pulling triangulation for the total order `order` (a permutation of the
/// vertex indices, smallest first): Pull(F) joins the smallest vertex of F
/// with the pulling triangulations of the facets of F that avoid it.
Triangulation pulling_triangulation(const Polytope& p, const std::vector<std::size_t>& order);

/// Pulling triangulation in input vertex order.
Triangulation pulling_triangulation(const Polytope& p);

enum class StarCase { OriginInterior, OriginOnBoundary, OriginIsVertex };

struct StarTriangulation {
    Triangulation triangulation;
    StarCase origin_case;
};

/// Star triangulation of `points` (which must contain the origin) with respect
/// to the origin. Every non-zero point must be a vertex of the hull. The origin
/// is joined with pulling triangulations of the hull facets that avoid it;
/// `order` (a permutation of point indices, optional) drives those pullings.
StarTriangulation star_triangulation(const std::vector<QVector>& points, const std::vector<std::size_t>& order = {});

/// Pulling triangulation with the spine first (index order), then the other
/// vertices in input order. Every maximal simplex contains the spine.
Triangulation spinal_triangulation(const Spine& s);

/// Projection data for a spine. Shadow points live in the ambient space,
/// inside the orthogonal complement of the spine directions.
struct ShadowMap {
    Spine spine;
    QVector translation;                // added to every vertex: moves the first spine point to 0
    QMatrix projection;                 // orthogonal projector onto the complement of the spine directions
    std::vector<QVector> shadow_points;  // image of each vertex of the polytope
    PointTable table;                   // shadow vertex table: [0] = origin, then the non-zero images
    std::vector<std::size_t> lift_table;  // table index -> vertex index (entry 0 unused)
    std::vector<std::size_t> fold_index;  // vertex index -> table index (0 for spine vertices)
    std::size_t e = 0;                  // dim(P) - n + 1
};

/// Throws InternalError if two non-spine vertices share an image or one maps to 0.
ShadowMap shadow(const Spine& s);

/// Polytope spanned by the shadow table's extreme points.
Polytope shadow_polytope(const ShadowMap& sm);

/// Projects a spinal triangulation: spine vertices collapse to table index 0.
/// Throws Error if some maximal simplex misses a spine vertex.
Triangulation fold(const Triangulation& t, const ShadowMap& sm);

/// Replaces 0 by the spine and every other shadow vertex by its preimage.
/// Throws Error if a simplex misses the origin or uses an unknown vertex.
Triangulation lift(const Triangulation& star, const ShadowMap& sm);

struct ValidationReport {
    bool valid = true;
    std::string diagnostic;
    explicit operator bool() const { return valid; }
};

/// Exact check that `simplices` (indices into `points`) triangulate p:
/// every simplex is full-dimensional in aff(p) with points inside p, the
/// simplex volumes add up to vol(p), and no two simplices share an interior point.
ValidationReport validate_simplices(const std::vector<QVector>& points, const std::vector<Simplex>& simplices,
                                    const Polytope& p);

ValidationReport validate(const Triangulation& t, const Polytope& p);

/// True iff every maximal simplex contains every index of `required`.
bool all_simplices_contain(const Triangulation& t, const IndexSet& required);

}  // namespace spinaltri
