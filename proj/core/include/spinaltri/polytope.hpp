#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "spinaltri/linalg.hpp"
#include "spinaltri/rational.hpp"
#include "spinaltri/vertex_set.hpp"

namespace spinaltri {

/// Supporting hyperplane normal . x <= offset of a facet. The normal is a
/// primitive integer vector, points outward, and lies in the direction space
/// of the polytope's affine hull (so it is unique for lower-dimensional polytopes too).
struct Facet {
    QVector normal;
    Rational offset;
    std::vector<std::size_t> incident;  // sorted vertex indices
    VertexMask mask = 0;
};

/// V-polytope: an ordered list of distinct points in convex position.
/// Facets are enumerated on first request and cached; copies share the cache.
class Polytope {
public:
    /// Validates distinctness and convex position.
    /// Throws DuplicatePoint / NotInConvexPosition / DimensionError / ScaleError.
    static Polytope make(std::vector<QVector> points);

    const std::vector<QVector>& vertices() const { return *vertices_; }
    const QVector& vertex(std::size_t i) const { return (*vertices_)[i]; }
    std::size_t size() const { return vertices_->size(); }
    std::size_t ambient_dim() const { return frame_.ambient_dim(); }
    std::size_t dim() const { return frame_.dim(); }
    bool full_dimensional() const { return dim() == ambient_dim(); }
    const AffineFrame& frame() const { return frame_; }
    VertexMask all() const { return full_mask(size()); }

    /// Canonically ordered facet list. Throws DimensionError for a single point.
    const std::vector<Facet>& facets() const;

    /// Facets of the face spanned by `face` (a vertex mask of a face of this
    /// polytope), derived combinatorially: they are the inclusion-maximal
    /// proper intersections of the face with facets of the polytope.
    std::vector<VertexMask> facets_of_face(VertexMask face) const;

    std::vector<QVector> points_of(VertexMask face) const;

private:
    struct FacetCache;
    Polytope() = default;

    std::shared_ptr<const std::vector<QVector>> vertices_;
    AffineFrame frame_;
    std::shared_ptr<FacetCache> cache_;
};

inline Polytope make_polytope(std::vector<QVector> points) { return Polytope::make(std::move(points)); }

inline const std::vector<Facet>& facets(const Polytope& p) { return p.facets(); }

/// Exact membership in conv(vertices).
bool contains(const Polytope& p, const QVector& x);

/// True iff x is a convex combination of `points` (which may be any point multiset).
bool in_convex_hull(const std::vector<QVector>& points, const QVector& x);

/// Vertices of conv(points), duplicates collapsed, in order of first appearance.
std::vector<QVector> extreme_points(const std::vector<QVector>& points);

/// Volume of p measured in its affine frame's coordinates, computed from the
/// barycentric (flag) subdivision of the face lattice. Independent of any
/// pulling order; used as the reference volume when validating triangulations.
/// For full-dimensional p this is the ordinary volume. 0 for a single point.
Rational flag_volume(const Polytope& p);

}  // namespace spinaltri
