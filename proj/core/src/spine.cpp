#include "spinaltri/spine.hpp"

#include <algorithm>

#include "spinaltri/errors.hpp"
#include "spinaltri/limits.hpp"
#include "spinaltri/triangulation.hpp"

namespace spinaltri {

namespace {

IndexSet normalized(const Polytope& p, IndexSet u) {
    if (u.empty()) throw Error("a spine needs at least one point");
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw Error("spine indices repeat");
    if (u.back() >= p.size()) throw Error("spine index " + std::to_string(u.back()) + " out of range");
    return u;
}

}  // namespace

Spine Spine::make(const Polytope& p, IndexSet indices) {
    indices = normalized(p, std::move(indices));
    if (!is_spine(p, indices)) throw Error("not a spine: some facet misses two or more of the points");
    std::vector<QVector> pts;
    for (auto i : indices) pts.push_back(p.vertex(i));
    if (affine_dimension(pts) + 1 != pts.size()) throw InternalError("spine points are affinely dependent");
    return Spine(p, std::move(indices));
}

std::vector<QVector> Spine::points() const {
    std::vector<QVector> out;
    for (auto i : indices_) out.push_back(polytope_.vertex(i));
    return out;
}

bool is_spine(const Polytope& p, const IndexSet& u) {
    const IndexSet v = normalized(p, u);
    if (v.size() == 1) return true;
    const VertexMask m = mask_of(v);
    for (const auto& f : p.facets())
        if (count(f.mask & m) + 1 < v.size()) return false;
    return true;
}

bool is_spine_geometric(const Polytope& p, const IndexSet& u) {
    const IndexSet v = normalized(p, u);
    if (p.dim() == 0) throw DimensionError("covering criterion needs a polytope of positive dimension");
    std::vector<std::size_t> order = v;
    const VertexMask m = mask_of(v);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(m & bit(i))) order.push_back(i);
    const Triangulation t = pulling_triangulation(p, order);

    const std::size_t k = p.dim();
    std::vector<QVector> local;
    for (const auto& x : p.vertices()) local.push_back(p.frame().to_local(x));
    Rational covered(0);
    for (const auto& s : t.simplices()) {
        if (!contains_all(mask_of(s), m)) continue;
        IncrementalEchelon ech(k);
        for (std::size_t i = 1; i < s.size(); ++i) ech.add(local[s[i]] - local[s[0]]);
        covered += ech.abs_pivot_product();
    }
    return covered / factorial(static_cast<unsigned>(k)) == flag_volume(p);
}

IndexSet face_spine(const Spine& s, const Facet& face) {
    const Polytope& p = s.polytope();
    IndexSet out, local;
    for (std::size_t j = 0; j < face.incident.size(); ++j)
        if (s.mask() & bit(face.incident[j])) {
            out.push_back(face.incident[j]);
            local.push_back(j);
        }
    if (out.empty()) throw InternalError("facet contains no spine point");
    std::vector<QVector> pts;
    for (auto i : face.incident) pts.push_back(p.vertex(i));
    const Polytope f = Polytope::make(std::move(pts));
    if (f.dim() > 0 && !is_spine(f, local)) throw InternalError("restriction of a spine to a facet is not a spine");
    return out;
}

std::vector<IndexSet> enumerate_spines(const Polytope& p, std::size_t min_size) {
    require_scale("vertex count for spine enumeration", p.size(), max_spine_enum_vertices());
    std::vector<IndexSet> out;
    const VertexMask all = p.all();
    for (VertexMask m = 1; m <= all && m != 0; ++m) {
        if (count(m) < std::max<std::size_t>(min_size, 1)) continue;
        if (count(m) > p.dim() + 1) continue;
        IndexSet u = indices_of(m);
        if (is_spine(p, u)) out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spinaltri
