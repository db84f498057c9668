#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinaltri/polytope.hpp"
#include "spinaltri/spine.hpp"
#include "spinaltri/triangulation.hpp"

namespace spinaltri {

/// volume is set only for full-dimensional polytopes; sq_volume is always
/// the squared dim-dimensional volume measured in the ambient space.
struct VolumeReport {
    std::optional<Rational> volume;
    Rational sq_volume;
    std::size_t dim = 0;
    std::size_t n_simplices = 0;
};

/// Triangulate-and-sum with the pulling triangulation for `order`.
/// A single point reports volume 0 with no simplices.
VolumeReport polytope_volume(const Polytope& p, const std::vector<std::size_t>& order);

/// Same, pulling in input vertex order.
VolumeReport polytope_volume(const Polytope& p);

/// Sum of the simplex volumes of t, measured in p's affine frame and then
/// rescaled to ambient squared measure. t must triangulate p.
VolumeReport triangulation_volume(const Triangulation& t, const Polytope& p);

struct LiftingReport {
    std::size_t d = 0;  // dim P
    std::size_t n = 0;  // |U|
    std::size_t e = 0;  // dim of the shadow
    Rational binom;     // C(d, n-1)
    Rational vol_p_sq;
    Rational vol_u_sq;
    Rational vol_shadow_sq;  // 1 when e = 0 (counting measure of the single point 0)
    std::size_t shadow_vertices = 0;
    bool relation_holds = false;  // binom^2 vol_p_sq == vol_u_sq vol_shadow_sq
    bool simplices_hold = false;  // the same identity for every simplex of the spinal triangulation and its fold
    explicit operator bool() const { return relation_holds && simplices_hold; }
};

/// Checks C(d, n-1)^2 vol(P)^2 = vol(U)^2 vol(shadow)^2 with all three
/// volumes computed independently. Throws Error if |U| < 2.
LiftingReport verify_lifting_relation(const Spine& s);

/// Per-simplex form for one simplex sigma containing U and its fold.
bool simplex_lifting_identity(const Spine& s, const Simplex& sigma, const ShadowMap& sm);

}  // namespace spinaltri
