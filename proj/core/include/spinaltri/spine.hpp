#pragma once

#include <cstddef>
#include <vector>

#include "spinaltri/polytope.hpp"

namespace spinaltri {

using IndexSet = std::vector<std::size_t>;  // sorted, duplicate-free vertex indices

/// A validated spine U of a polytope: every facet holds at least |U|-1 points of U.
class Spine {
public:
    /// Throws Error if `indices` is empty, out of range, or not a spine.
    static Spine make(const Polytope& p, IndexSet indices);

    const Polytope& polytope() const { return polytope_; }
    const IndexSet& indices() const { return indices_; }
    std::size_t n() const { return indices_.size(); }
    VertexMask mask() const { return mask_of(indices_); }
    std::vector<QVector> points() const;

private:
    Spine(Polytope p, IndexSet indices) : polytope_(std::move(p)), indices_(std::move(indices)) {}

    Polytope polytope_;
    IndexSet indices_;
};

/// Facet criterion: every facet contains >= |u|-1 of the points in u.
bool is_spine(const Polytope& p, const IndexSet& u);

/// Covering criterion: the simplices of a pulling triangulation that pulls u
/// first and contain all of u must fill the whole polytope (volume check
/// against the flag volume). Desk scale only.
bool is_spine_geometric(const Polytope& p, const IndexSet& u);

/// U intersected with the facet. Verified to be a spine of the facet viewed
/// as a polytope in its own affine hull; throws InternalError otherwise.
IndexSet face_spine(const Spine& s, const Facet& face);

/// All spines with at least min_size points, in lexicographic order.
std::vector<IndexSet> enumerate_spines(const Polytope& p, std::size_t min_size);

}  // namespace spinaltri
