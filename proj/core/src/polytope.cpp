#include "spinaltri/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "spinaltri/errors.hpp"
#include "spinaltri/limits.hpp"
#include "spinaltri/lp.hpp"

namespace spinaltri {

struct Polytope::FacetCache {
    std::once_flag once;
    std::vector<Facet> facets;
};

namespace {

// Scales v to the primitive integer vector with the same direction.
QVector primitive(const QVector& v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.dim());
    for (const auto& x : v) {
        ints.push_back(x.raw().get_num() * (l / x.raw().get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    QVector out(v.dim());
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(mpz_class(ints[i] / g));
    return out;
}

// Brute-force facet enumeration for a full-dimensional point set in R^k:
// every affinely independent k-subset spans a candidate hyperplane, which is
// kept if all points lie on one side. Subsets lying inside an already known
// facet are skipped, since they span that facet's hyperplane again.
class FacetSearch {
public:
    explicit FacetSearch(const std::vector<QVector>& local) : pts_(local), k_(local[0].dim()) {}

    std::vector<std::pair<QVector, VertexMask>> run() {
        std::vector<std::size_t> chosen;
        IncrementalEchelon ech(k_);
        descend(0, chosen, ech);
        return std::move(found_);
    }

private:
    void descend(std::size_t start, std::vector<std::size_t>& chosen, const IncrementalEchelon& ech) {
        if (chosen.size() == k_) {
            leaf(chosen);
            return;
        }
        // Not enough points left to complete the subset.
        if (pts_.size() - start < k_ - chosen.size()) return;
        for (std::size_t i = start; i < pts_.size(); ++i) {
            if (pts_.size() - i < k_ - chosen.size()) break;
            if (chosen.empty()) {
                chosen.push_back(i);
                descend(i + 1, chosen, ech);
                chosen.pop_back();
                continue;
            }
            IncrementalEchelon next = ech;
            if (!next.add(pts_[i] - pts_[chosen[0]])) continue;
            chosen.push_back(i);
            descend(i + 1, chosen, next);
            chosen.pop_back();
        }
    }

    void leaf(const std::vector<std::size_t>& chosen) {
        const VertexMask sub = mask_of(chosen);
        for (const auto& f : found_)
            if (contains_all(f.second, sub)) return;

        QVector normal;
        if (k_ == 1) {
            normal = QVector{Rational(1)};
        } else {
            std::vector<QVector> rows;
            for (std::size_t i = 1; i < chosen.size(); ++i) rows.push_back(pts_[chosen[i]] - pts_[chosen[0]]);
            auto ker = kernel_basis(QMatrix::from_rows(rows));
            if (ker.size() != 1) throw InternalError("facet candidate with non-trivial kernel");
            normal = std::move(ker[0]);
        }
        const Rational level = dot(normal, pts_[chosen[0]]);
        bool above = false, below = false;
        VertexMask on = 0;
        for (std::size_t j = 0; j < pts_.size(); ++j) {
            int s = (dot(normal, pts_[j]) - level).sign();
            if (s > 0) above = true;
            if (s < 0) below = true;
            if (s == 0) on |= bit(j);
            if (above && below) return;
        }
        if (above) normal = -normal;  // outward: all points satisfy normal . x <= level
        found_.emplace_back(std::move(normal), on);
    }

    const std::vector<QVector>& pts_;
    std::size_t k_;
    std::vector<std::pair<QVector, VertexMask>> found_;
};

}  // namespace

Polytope Polytope::make(std::vector<QVector> points) {
    if (points.empty()) throw DimensionError("polytope needs at least one point");
    const std::size_t d = points[0].dim();
    for (const auto& p : points)
        if (p.dim() != d) throw DimensionError("polytope points of unequal dimension");
    require_scale("vertex count", points.size(), max_vertices());
    require_scale("ambient dimension", d, max_ambient_dim());

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (points[order[i]] == points[order[i - 1]])
            throw DuplicatePoint(std::min(order[i], order[i - 1]), std::max(order[i], order[i - 1]));

    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<QVector> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!others.empty() && in_convex_hull(others, points[i])) throw NotInConvexPosition(i);
    }

    Polytope p;
    p.frame_ = AffineFrame::of(points);
    p.vertices_ = std::make_shared<const std::vector<QVector>>(std::move(points));
    p.cache_ = std::make_shared<FacetCache>();
    return p;
}

const std::vector<Facet>& Polytope::facets() const {
    std::call_once(cache_->once, [this] {
        if (dim() == 0) throw DimensionError("facets of a single point are undefined");
        require_scale("vertex count", size(), kMaxMaskVertices);
        std::vector<QVector> local;
        local.reserve(size());
        for (const auto& v : vertices()) local.push_back(frame_.to_local(v));

        std::vector<Facet> out;
        for (auto& [local_normal, mask] : FacetSearch(local).run()) {
            Facet f;
            f.normal = primitive(frame_.normal_to_ambient(local_normal));
            f.incident = indices_of(mask);
            f.offset = dot(f.normal, vertex(f.incident.front()));
            f.mask = mask;
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
            if (a.normal != b.normal) return a.normal < b.normal;
            return a.offset < b.offset;
        });
        cache_->facets = std::move(out);
    });
    return cache_->facets;
}

std::vector<VertexMask> Polytope::facets_of_face(VertexMask face) const {
    std::vector<VertexMask> candidates;
    for (const auto& f : facets()) {
        VertexMask c = face & f.mask;
        if (c != face && c != 0) candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<VertexMask> out;
    for (auto c : candidates) {
        bool maximal = true;
        for (auto o : candidates)
            if (o != c && contains_all(o, c)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<QVector> Polytope::points_of(VertexMask face) const {
    std::vector<QVector> out;
    for (auto i : indices_of(face)) out.push_back(vertex(i));
    return out;
}

bool in_convex_hull(const std::vector<QVector>& points, const QVector& x) {
    if (points.empty()) return false;
    const std::size_t d = x.dim();
    // lambda >= 0, sum lambda = 1, sum lambda_i p_i = x
    QMatrix a(d + 1, points.size());
    QVector b(d + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].dim() != d) throw DimensionError("membership: dimension mismatch");
        for (std::size_t r = 0; r < d; ++r) a(r, j) = points[j][r];
        a(d, j) = 1;
    }
    for (std::size_t r = 0; r < d; ++r) b[r] = x[r];
    b[d] = 1;
    return feasible_nonnegative(a, b, std::vector<bool>(points.size(), false));
}

bool contains(const Polytope& p, const QVector& x) {
    if (x.dim() != p.ambient_dim()) throw DimensionError("contains: dimension mismatch");
    return in_convex_hull(p.vertices(), x);
}

std::vector<QVector> extreme_points(const std::vector<QVector>& points) {
    std::vector<QVector> unique;
    for (const auto& p : points)
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    if (unique.size() <= 1) return unique;
    std::vector<QVector> out;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(unique[j]);
        if (!in_convex_hull(others, unique[i])) out.push_back(unique[i]);
    }
    return out;
}

namespace {

class FlagVolume {
public:
    explicit FlagVolume(const Polytope& p) : p_(p) {
        for (std::size_t i = 0; i < p.size(); ++i) local_.push_back(p.frame().to_local(p.vertex(i)));
    }

    Rational run() {
        const std::size_t k = p_.dim();
        if (k == 0) return Rational(0);
        apex_ = centroid(p_.all());
        IncrementalEchelon ech(k);
        descend(p_.all(), ech);
        return total_ / factorial(static_cast<unsigned>(k));
    }

private:
    QVector centroid(VertexMask face) {
        auto it = centroids_.find(face);
        if (it != centroids_.end()) return it->second;
        QVector c(p_.dim());
        auto idx = indices_of(face);
        for (auto i : idx) c += local_[i];
        c *= Rational(1) / Rational(static_cast<long>(idx.size()));
        centroids_.emplace(face, c);
        return c;
    }

    const std::vector<VertexMask>& children(VertexMask face) {
        auto it = children_.find(face);
        if (it != children_.end()) return it->second;
        return children_.emplace(face, p_.facets_of_face(face)).first->second;
    }

    // Walks every complete flag P = F_k > F_{k-1} > ... > F_0; each flag
    // contributes the simplex on the centroids of its faces.
    void descend(VertexMask face, const IncrementalEchelon& ech) {
        if (count(face) == 1) {
            if (ech.rank() != p_.dim()) throw InternalError("flag simplex is degenerate");
            total_ += ech.abs_pivot_product();
            return;
        }
        for (auto child : children(face)) {
            IncrementalEchelon next = ech;
            if (!next.add(centroid(child) - apex_)) throw InternalError("flag simplex is degenerate");
            descend(child, next);
        }
    }

    const Polytope& p_;
    std::vector<QVector> local_;
    QVector apex_;
    Rational total_{0};
    std::unordered_map<VertexMask, QVector> centroids_;
    std::unordered_map<VertexMask, std::vector<VertexMask>> children_;
};

}  // namespace

Rational flag_volume(const Polytope& p) { return FlagVolume(p).run(); }

}  // namespace spinaltri
