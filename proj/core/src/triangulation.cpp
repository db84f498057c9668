#include "spinaltri/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "spinaltri/errors.hpp"
#include "spinaltri/lp.hpp"

namespace spinaltri {

namespace {

// Pull() over the face lattice of p, memoised by face mask.
class Puller {
public:
    Puller(const Polytope& p, const std::vector<std::size_t>& order) : p_(p), rank_(p.size()) {
        if (order.size() != p.size()) throw Error("pulling order must list every vertex exactly once");
        std::vector<bool> seen(p.size(), false);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            if (order[pos] >= p.size() || seen[order[pos]])
                throw Error("pulling order must list every vertex exactly once");
            seen[order[pos]] = true;
            rank_[order[pos]] = pos;
        }
    }

    const std::vector<VertexMask>& pull(VertexMask face) {
        if (auto it = memo_.find(face); it != memo_.end()) return it->second;
        std::vector<VertexMask> out;
        if (count(face) == 1) {
            out.push_back(face);
        } else {
            const std::size_t apex = smallest(face);
            for (auto facet : p_.facets_of_face(face)) {
                if (facet & bit(apex)) continue;
                for (auto s : pull(facet)) out.push_back(s | bit(apex));
            }
        }
        return memo_.emplace(face, std::move(out)).first->second;
    }

    std::size_t smallest(VertexMask face) const {
        std::size_t best = 0;
        bool have = false;
        for (auto i : indices_of(face))
            if (!have || rank_[i] < rank_[best]) {
                best = i;
                have = true;
            }
        return best;
    }

private:
    const Polytope& p_;
    std::vector<std::size_t> rank_;
    std::unordered_map<VertexMask, std::vector<VertexMask>> memo_;
};

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Volume of a simplex in the frame's local coordinates, times k!.
Rational scaled_local_volume(const std::vector<QVector>& local, const Simplex& s, std::size_t k) {
    IncrementalEchelon ech(k);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!ech.add(local[s[i]] - local[s[0]])) return Rational(0);
    return ech.rank() == k ? ech.abs_pivot_product() : Rational(0);
}

bool interiors_meet(const std::vector<QVector>& local, const Simplex& a, const Simplex& b, std::size_t k) {
    // Cheap exact rejection: separated along some coordinate axis.
    for (std::size_t c = 0; c < k; ++c) {
        Rational amin = local[a[0]][c], amax = amin, bmin = local[b[0]][c], bmax = bmin;
        for (auto i : a) {
            amin = std::min(amin, local[i][c]);
            amax = std::max(amax, local[i][c]);
        }
        for (auto i : b) {
            bmin = std::min(bmin, local[i][c]);
            bmax = std::max(bmax, local[i][c]);
        }
        if (amax <= bmin || bmax <= amin) return false;
    }
    // lambda, mu > 0, sum lambda = sum mu = 1, sum lambda_i a_i = sum mu_j b_j
    const std::size_t n = a.size() + b.size();
    QMatrix m(k + 2, n);
    QVector rhs(k + 2);
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t r = 0; r < k; ++r) m(r, j) = local[a[j]][r];
        m(k, j) = 1;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t r = 0; r < k; ++r) m(r, a.size() + j) = -local[b[j]][r];
        m(k + 1, a.size() + j) = 1;
    }
    rhs[k] = 1;
    rhs[k + 1] = 1;
    return feasible_nonnegative(m, rhs, std::vector<bool>(n, true));
}

}  // namespace

Triangulation::Triangulation(PointTable points, std::vector<Simplex> simplices, std::size_t dim)
    : points_(std::move(points)), simplices_(std::move(simplices)), dim_(dim) {
    for (auto& s : simplices_) std::sort(s.begin(), s.end());
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
}

Triangulation pulling_triangulation(const Polytope& p, const std::vector<std::size_t>& order) {
    Puller puller(p, order);
    std::vector<Simplex> simplices;
    if (p.dim() == 0) {
        simplices.push_back({0});
    } else {
        for (auto m : puller.pull(p.all())) simplices.push_back(indices_of(m));
    }
    return Triangulation(std::make_shared<const std::vector<QVector>>(p.vertices()), std::move(simplices), p.dim());
}

Triangulation pulling_triangulation(const Polytope& p) { return pulling_triangulation(p, identity_order(p.size())); }

StarTriangulation star_triangulation(const std::vector<QVector>& points, const std::vector<std::size_t>& order) {
    if (points.empty()) throw Error("star triangulation of an empty point set");
    const std::size_t d = points[0].dim();
    std::size_t origin = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != d) throw DimensionError("star triangulation: points of unequal dimension");
        if (points[i].is_zero()) {
            if (origin != points.size()) throw Error("star triangulation: origin listed twice");
            origin = i;
        }
    }
    if (origin == points.size()) throw Error("star triangulation: the origin is not among the points");

    std::vector<std::size_t> ord = order.empty() ? identity_order(points.size()) : order;
    if (ord.size() != points.size()) throw Error("star triangulation: order must be a permutation of the points");

    // Hull vertices, remembering their index in `points`.
    std::vector<QVector> hull_pts;
    std::vector<std::size_t> to_input;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        const bool extreme = others.empty() || !in_convex_hull(others, points[i]);
        if (extreme) {
            hull_pts.push_back(points[i]);
            to_input.push_back(i);
        } else if (i != origin) {
            throw Error("star triangulation: point " + std::to_string(i) + " is not a vertex of the hull");
        }
    }
    Polytope hull = Polytope::make(hull_pts);
    auto table = std::make_shared<const std::vector<QVector>>(points);

    if (hull.dim() == 0) return {Triangulation(table, {{origin}}, 0), StarCase::OriginIsVertex};

    // Order restricted to hull vertices.
    std::vector<std::size_t> hull_index(points.size(), points.size());
    for (std::size_t h = 0; h < to_input.size(); ++h) hull_index[to_input[h]] = h;
    std::vector<std::size_t> hull_order;
    for (auto i : ord) {
        if (i >= points.size()) throw Error("star triangulation: order index out of range");
        if (hull_index[i] != points.size()) hull_order.push_back(hull_index[i]);
    }

    const bool origin_is_vertex = hull_index[origin] != points.size();
    if (origin_is_vertex) {
        // Pulling the origin first is exactly the star construction.
        std::vector<std::size_t> o{hull_index[origin]};
        for (auto h : hull_order)
            if (h != hull_index[origin]) o.push_back(h);
        Puller puller(hull, o);
        std::vector<Simplex> simplices;
        for (auto m : puller.pull(hull.all())) {
            Simplex s;
            for (auto h : indices_of(m)) s.push_back(to_input[h]);
            simplices.push_back(std::move(s));
        }
        return {Triangulation(table, std::move(simplices), hull.dim()), StarCase::OriginIsVertex};
    }

    // Origin inside or on the boundary: join it with every facet that avoids it.
    Puller puller(hull, hull_order);
    std::vector<Simplex> simplices;
    bool on_boundary = false;
    for (const auto& f : hull.facets()) {
        if (f.offset.is_zero()) {
            on_boundary = true;
            continue;
        }
        for (auto m : puller.pull(f.mask)) {
            Simplex s{origin};
            for (auto h : indices_of(m)) s.push_back(to_input[h]);
            simplices.push_back(std::move(s));
        }
    }
    return {Triangulation(table, std::move(simplices), hull.dim()),
            on_boundary ? StarCase::OriginOnBoundary : StarCase::OriginInterior};
}

Triangulation spinal_triangulation(const Spine& s) {
    const Polytope& p = s.polytope();
    std::vector<std::size_t> order = s.indices();
    const VertexMask u = s.mask();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(u & bit(i))) order.push_back(i);
    Triangulation t = pulling_triangulation(p, order);
    if (!all_simplices_contain(t, s.indices()))
        throw InternalError("pulling triangulation with the spine first is not spinal");
    return t;
}

ShadowMap shadow(const Spine& s) {
    const Polytope& p = s.polytope();
    const std::size_t d = p.ambient_dim();
    ShadowMap sm{s, {}, {}, {}, {}, {}, {}, 0};
    const QVector& base = p.vertex(s.indices().front());
    sm.translation = -base;

    std::vector<QVector> dirs;
    for (std::size_t i = 1; i < s.n(); ++i) dirs.push_back(p.vertex(s.indices()[i]) - base);
    if (dirs.empty()) {
        sm.projection = QMatrix::identity(d);
    } else {
        QMatrix a = QMatrix::from_columns(dirs);
        QMatrix at = a.transposed();
        sm.projection = QMatrix::identity(d) - a * inverse(at * a) * at;
    }
    sm.e = p.dim() + 1 - s.n();

    const VertexMask u = s.mask();
    std::vector<QVector> table{QVector(d)};
    sm.lift_table.push_back(p.size());
    sm.fold_index.assign(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        QVector img = sm.projection * (p.vertex(i) + sm.translation);
        sm.shadow_points.push_back(img);
        if (u & bit(i)) {
            if (!img.is_zero()) throw InternalError("spine vertex has a non-zero shadow");
            continue;
        }
        if (img.is_zero()) throw InternalError("non-spine vertex " + std::to_string(i) + " projects to the origin");
        if (std::find(table.begin(), table.end(), img) != table.end())
            throw InternalError("two non-spine vertices share the shadow point of vertex " + std::to_string(i));
        sm.fold_index[i] = table.size();
        sm.lift_table.push_back(i);
        table.push_back(std::move(img));
    }
    sm.table = std::make_shared<const std::vector<QVector>>(std::move(table));
    return sm;
}

Polytope shadow_polytope(const ShadowMap& sm) { return Polytope::make(extreme_points(*sm.table)); }

Triangulation fold(const Triangulation& t, const ShadowMap& sm) {
    const Polytope& p = sm.spine.polytope();
    if (t.points() != p.vertices()) throw Error("fold: triangulation is not over the spine's polytope");
    const VertexMask u = sm.spine.mask();
    std::vector<Simplex> out;
    for (const auto& s : t.simplices()) {
        if (!contains_all(mask_of(s), u)) throw Error("fold: triangulation is not spinal for this spine");
        Simplex img{0};
        for (auto v : s)
            if (!(u & bit(v))) img.push_back(sm.fold_index[v]);
        out.push_back(std::move(img));
    }
    return Triangulation(sm.table, std::move(out), sm.e);
}

Triangulation lift(const Triangulation& star, const ShadowMap& sm) {
    std::vector<Simplex> out;
    for (const auto& s : star.simplices()) {
        if (std::find(s.begin(), s.end(), 0) == s.end()) throw Error("lift: simplex does not contain the origin");
        Simplex pre = sm.spine.indices();
        for (auto k : s) {
            if (k == 0) continue;
            if (k >= sm.lift_table.size()) throw Error("lift: shadow vertex " + std::to_string(k) + " has no preimage");
            pre.push_back(sm.lift_table[k]);
        }
        out.push_back(std::move(pre));
    }
    const Polytope& p = sm.spine.polytope();
    return Triangulation(std::make_shared<const std::vector<QVector>>(p.vertices()), std::move(out), p.dim());
}

ValidationReport validate_simplices(const std::vector<QVector>& points, const std::vector<Simplex>& simplices,
                                    const Polytope& p) {
    auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
    const std::size_t k = p.dim();
    if (simplices.empty()) return fail("no simplices");

    std::vector<bool> used(points.size(), false);
    for (const auto& s : simplices) {
        if (s.size() != k + 1) return fail("simplex with " + std::to_string(s.size()) + " vertices in dimension " +
                                           std::to_string(k));
        for (auto i : s) {
            if (i >= points.size()) return fail("simplex index out of range");
            used[i] = true;
        }
    }
    std::vector<QVector> local(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!used[i]) continue;
        if (!p.frame().contains(points[i])) return fail("point " + std::to_string(i) + " outside the affine hull");
        if (!contains(p, points[i])) return fail("point " + std::to_string(i) + " outside the polytope");
        local[i] = p.frame().to_local(points[i]);
    }

    if (k == 0) {
        if (simplices.size() != 1) return fail("a point is triangulated by exactly one simplex");
        return {};
    }

    Rational total(0);
    for (const auto& s : simplices) {
        Rational v = scaled_local_volume(local, s, k);
        if (v.is_zero()) return fail("degenerate simplex");
        total += v;
    }
    total /= factorial(static_cast<unsigned>(k));
    const Rational expected = flag_volume(p);
    if (total != expected)
        return fail("simplex volumes sum to " + total.to_string() + " but the polytope has volume " +
                    expected.to_string());

    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (std::size_t j = i + 1; j < simplices.size(); ++j)
            if (interiors_meet(local, simplices[i], simplices[j], k))
                return fail("simplices " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    return {};
}

ValidationReport validate(const Triangulation& t, const Polytope& p) {
    if (t.dim() != p.dim()) return {false, "triangulation dimension differs from the polytope's"};
    return validate_simplices(t.points(), t.simplices(), p);
}

bool all_simplices_contain(const Triangulation& t, const IndexSet& required) {
    const VertexMask r = mask_of(required);
    for (const auto& s : t.simplices())
        if (!contains_all(mask_of(s), r)) return false;
    return true;
}

}  // namespace spinaltri
