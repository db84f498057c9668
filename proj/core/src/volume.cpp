#include "spinaltri/volume.hpp"

#include "spinaltri/errors.hpp"

namespace spinaltri {

VolumeReport triangulation_volume(const Triangulation& t, const Polytope& p) {
    VolumeReport r;
    r.dim = p.dim();
    if (r.dim == 0) {
        r.volume = Rational(0);
        r.sq_volume = Rational(0);
        return r;
    }
    const std::size_t k = r.dim;
    std::vector<QVector> local;
    local.reserve(t.points().size());
    for (const auto& x : t.points()) local.push_back(p.frame().to_local(x));
    Rational total(0);
    for (const auto& s : t.simplices()) {
        IncrementalEchelon ech(k);
        for (std::size_t i = 1; i < s.size(); ++i) ech.add(local[s[i]] - local[s[0]]);
        if (ech.rank() != k) throw InternalError("degenerate simplex in a triangulation");
        total += ech.abs_pivot_product();
    }
    total /= factorial(static_cast<unsigned>(k));
    r.n_simplices = t.size();
    r.sq_volume = total * total * p.frame().gram();
    if (p.full_dimensional()) r.volume = total;
    return r;
}

VolumeReport polytope_volume(const Polytope& p, const std::vector<std::size_t>& order) {
    if (p.dim() == 0) {
        VolumeReport r;
        r.volume = Rational(0);
        r.sq_volume = Rational(0);
        return r;
    }
    return triangulation_volume(pulling_triangulation(p, order), p);
}

VolumeReport polytope_volume(const Polytope& p) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return polytope_volume(p, order);
}

bool simplex_lifting_identity(const Spine& s, const Simplex& sigma, const ShadowMap& sm) {
    const Polytope& p = s.polytope();
    const VertexMask u = s.mask();
    if (!contains_all(mask_of(sigma), u)) throw Error("simplex does not contain the spine");
    std::vector<QVector> full, folded{QVector(p.ambient_dim())};
    for (auto v : sigma) {
        full.push_back(p.vertex(v));
        if (!(u & bit(v))) folded.push_back(sm.shadow_points[v]);
    }
    const Rational b = binomial(static_cast<unsigned>(p.dim()), static_cast<unsigned>(s.n() - 1));
    const Rational lhs = b * b * gram_sq_volume(full, p.dim());
    const Rational rhs = gram_sq_volume(s.points(), s.n() - 1) * gram_sq_volume(folded, sm.e);
    return lhs == rhs;
}

LiftingReport verify_lifting_relation(const Spine& s) {
    if (s.n() < 2) throw Error("the volume relation needs a spine with at least two points");
    const Polytope& p = s.polytope();
    LiftingReport r;
    r.d = p.dim();
    r.n = s.n();
    r.binom = binomial(static_cast<unsigned>(r.d), static_cast<unsigned>(r.n - 1));
    r.vol_p_sq = polytope_volume(p).sq_volume;
    r.vol_u_sq = gram_sq_volume(s.points(), r.n - 1);

    const ShadowMap sm = shadow(s);
    r.e = sm.e;
    const Polytope sp = shadow_polytope(sm);
    r.shadow_vertices = sp.size();
    if (sp.dim() != r.e) throw InternalError("shadow has unexpected dimension");
    r.vol_shadow_sq = r.e == 0 ? Rational(1) : polytope_volume(sp).sq_volume;
    r.relation_holds = r.binom * r.binom * r.vol_p_sq == r.vol_u_sq * r.vol_shadow_sq;

    r.simplices_hold = true;
    const Triangulation t = spinal_triangulation(s);
    for (const auto& sigma : t.simplices())
        if (!simplex_lifting_identity(s, sigma, sm)) {
            r.simplices_hold = false;
            break;
        }
    return r;
}

}  // namespace spinaltri
