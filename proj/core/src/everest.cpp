#include "spinaltri/everest.hpp"

#include <algorithm>
#include <set>

#include "spinaltri/errors.hpp"
#include "spinaltri/limits.hpp"
#include "spinaltri/volume.hpp"

namespace spinaltri {

namespace {

constexpr std::size_t kMaxEverestDim = 6;

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// Calls f(tuple) for every (j_1, ..., j_n) in {0..s}^n, lexicographically.
template <class F>
void for_each_tuple(std::size_t n, std::size_t s, F&& f) {
    std::vector<std::size_t> t(n, 0);
    while (true) {
        f(t);
        std::size_t i = n;
        while (i > 0 && t[i - 1] == s) t[--i] = 0;
        if (i == 0) return;
        ++t[i - 1];
    }
}

QVector stacked_rows(std::size_t s, const std::vector<std::size_t>& tuple) {
    QVector x(tuple.size() * s);
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (tuple[i] > 0) x[i * s + tuple[i] - 1] = -1;
    return x;
}

std::vector<QVector> minus_one_points(std::size_t n, std::size_t s) {
    std::vector<QVector> out;
    for_each_tuple(n, s, [&](const auto& t) { out.push_back(stacked_rows(s, t)); });
    return out;
}

std::vector<QVector> zero_points(std::size_t n, std::size_t s) {
    std::vector<QVector> out;
    for (std::size_t j = 0; j <= s; ++j) out.push_back(stacked_rows(s, std::vector<std::size_t>(n, j)));
    return out;
}

const Rational& entry(const QVector& x, std::size_t s, std::size_t i, std::size_t j) { return x[i * s + j]; }

void require_dim(const EverestParams& params, const QVector& x) {
    if (x.dim() != params.dim())
        throw DimensionError("expected a point of dimension " + std::to_string(params.dim()) + ", got " +
                             std::to_string(x.dim()));
}

std::set<QVector> as_set(const std::vector<QVector>& v) { return {v.begin(), v.end()}; }

NamedCheck check(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, std::move(detail)};
}

}  // namespace

EverestParams EverestParams::make(std::size_t n, std::size_t s) {
    if (n < 1 || s < 1) throw Error("Everest parameters must satisfy n >= 1 and s >= 1");
    return {n, s};
}

GEvaluation g_detail(const EverestParams& params, const QVector& x) {
    require_dim(params, x);
    const std::size_t n = params.n, s = params.s;
    GEvaluation g;
    g.value = Rational(0);
    for (std::size_t j = 0; j < s; ++j) {
        Rational mj(0);
        for (std::size_t i = 0; i < n; ++i) mj = std::max(mj, entry(x, s, i, j));
        g.column_max.push_back(mj);
        g.value += mj;
    }
    g.m = Rational(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational si(0);
        for (std::size_t j = 0; j < s; ++j) si -= entry(x, s, i, j);
        g.neg_row_sum.push_back(si);
        g.m = std::max(g.m, si);
    }
    g.value += g.m;
    return g;
}

Rational g_eval(const EverestParams& params, const QVector& x) { return g_detail(params, x).value; }

bool everest_membership(const EverestParams& params, const QVector& x) { return g_eval(params, x) <= Rational(1); }

QVector unit_row(std::size_t s, std::size_t j) {
    if (j > s) throw DimensionError("unit_row index out of range");
    return j == 0 ? QVector(s) : QVector::unit(s, j - 1);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::MinusOne: return "V_minus_one";
        case FamilyKind::Zero: return "V_zero";
        case FamilyKind::One: return "V_one";
        case FamilyKind::EverestVertices: return "everest_vertices";
    }
    return "unknown";
}

VertexFamilies vertex_families(const EverestParams& params) {
    const std::size_t n = params.n, s = params.s;
    VertexFamilies f{{FamilyKind::MinusOne, minus_one_points(n, s)},
                     {FamilyKind::Zero, zero_points(n, s)},
                     {FamilyKind::One, {}},
                     {FamilyKind::EverestVertices, {}}};
    std::set<QVector> one;
    for (const auto& v : f.minus_one.points)
        for (const auto& u : f.zero.points)
            if (!u.is_zero()) one.insert(v - u);
    f.one.points.assign(one.begin(), one.end());

    const std::set<QVector> minus_one = as_set(f.minus_one.points);
    for (const auto& v : f.minus_one.points)
        if (!v.is_zero()) f.everest.points.push_back(v);
    for (const auto& v : f.one.points)
        if (!v.is_zero() && !minus_one.count(v)) f.everest.points.push_back(v);
    return f;
}

bool matches_minus_one_rules(const EverestParams& params, const QVector& x) {
    require_dim(params, x);
    for (std::size_t i = 0; i < params.n; ++i) {
        int minus = 0;
        for (std::size_t j = 0; j < params.s; ++j) {
            const Rational& v = entry(x, params.s, i, j);
            if (v == Rational(-1)) ++minus;
            else if (!v.is_zero()) return false;
        }
        if (minus > 1) return false;
    }
    return true;
}

bool matches_zero_rules(const EverestParams& params, const QVector& x) {
    if (!matches_minus_one_rules(params, x)) return false;
    std::set<std::size_t> cols;
    for (std::size_t i = 0; i < params.n; ++i)
        for (std::size_t j = 0; j < params.s; ++j)
            if (!entry(x, params.s, i, j).is_zero()) cols.insert(j);
    if (cols.size() > 1) return false;
    // All rows carry the -1 or none does.
    if (cols.empty()) return true;
    for (std::size_t i = 0; i < params.n; ++i)
        if (entry(x, params.s, i, *cols.begin()).is_zero()) return false;
    return true;
}

bool matches_one_rules(const EverestParams& params, const QVector& x) {
    require_dim(params, x);
    const std::size_t n = params.n, s = params.s;
    std::set<std::size_t> one_cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            const Rational& v = entry(x, s, i, j);
            if (v == Rational(1)) one_cols.insert(j);
            else if (!v.is_zero() && v != Rational(-1)) return false;
        }
    if (one_cols.size() > 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
        bool has_one = false;
        int minus = 0;
        for (std::size_t j = 0; j < s; ++j) {
            const Rational& v = entry(x, s, i, j);
            if (v == Rational(1)) has_one = true;
            if (v == Rational(-1)) ++minus;
        }
        if (!one_cols.empty() && entry(x, s, i, *one_cols.begin()) == Rational(-1)) return false;
        if (has_one && minus > 1) return false;
        if (!has_one && minus > 0) return false;
    }
    return true;
}

std::size_t expected_minus_one_size(const EverestParams& p) { return ipow(p.s + 1, p.n); }
std::size_t expected_zero_size(const EverestParams& p) { return p.s + 1; }
std::size_t expected_one_size(const EverestParams& p) { return p.s * ipow(p.s + 1, p.n) - p.s + 1; }
std::size_t expected_everest_size(const EverestParams& p) { return ipow(p.s + 1, p.n + 1) - p.s - 1; }

Polytope everest_polytope(const EverestParams& params) {
    std::size_t cap = kMaxEverestDim;
    if (auto o = scale_override()) cap = std::max(cap, *o);
    require_scale("Everest dimension ns", params.dim(), cap);
    auto pts = vertex_families(params).everest.points;
    for (const auto& v : pts)
        if (g_eval(params, v) != Rational(1)) throw InternalError("claimed Everest vertex " + v.to_string() + " has g != 1");
    return Polytope::make(std::move(pts));
}

Polytope simplotope(std::size_t n, std::size_t s) {
    if (n < 1 || s < 1) throw Error("simplotope parameters must be positive");
    return Polytope::make(minus_one_points(n, s));
}

IndexSet simplotope_spine_indices(std::size_t n, std::size_t s) {
    IndexSet out;
    for (std::size_t j = 0; j <= s; ++j) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = idx * (s + 1) + j;
        out.push_back(idx);
    }
    return out;
}

QMatrix se_matrix(const EverestParams& params) {
    const std::size_t n = params.n, s = params.s;
    QMatrix m(n * s, (n + 1) * s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            m(i * s + j, i * s + j) = 1;
            m(i * s + j, n * s + j) = -1;
        }
    return m;
}

SeSquare se_square_matrices(const EverestParams& params) {
    const std::size_t n = params.n, s = params.s, ns = n * s, d = (n + 1) * s;
    const QMatrix pi = se_matrix(params);
    SeSquare out{QMatrix(d, d), QMatrix(ns, d)};
    for (std::size_t r = 0; r < ns; ++r)
        for (std::size_t c = 0; c < d; ++c) out.square(r, c) = pi(r, c);
    for (std::size_t j = 0; j < s; ++j) out.square(ns + j, ns + j) = 1;
    for (std::size_t r = 0; r < ns; ++r) out.projection(r, r) = 1;

    if (!(out.projection * out.square == pi)) throw InternalError("projection * square extension differs from se_matrix");
    std::vector<QVector> images;
    for (const auto& u : zero_points(n + 1, s)) {
        if (u.is_zero()) continue;
        QVector img = out.square * u;
        if (!(out.projection * img).is_zero()) throw InternalError("transformed spine point outside ker(projection)");
        images.push_back(std::move(img));
    }
    if (rank(QMatrix::from_rows(images)) != d - ns) throw InternalError("transformed spine does not span ker(projection)");
    return out;
}

Rational c_constant(const EverestParams& params) {
    const auto n = static_cast<unsigned>(params.n), s = static_cast<unsigned>(params.s);
    return factorial((n + 1) * s) / (factorial(n * s) * pow(factorial(s), n + 1));
}

Rational c_constant_multinomial(const EverestParams& params) {
    const auto n = static_cast<unsigned>(params.n), s = static_cast<unsigned>(params.s);
    Rational multinomial(1);
    for (unsigned k = 1; k <= n + 1; ++k) multinomial *= binomial(k * s, s);
    return multinomial / factorial(n * s);
}

Rational everest_volume(const EverestParams& params, VolumeMethod method) {
    switch (method) {
        case VolumeMethod::Formula: return c_constant(params);
        case VolumeMethod::Hull: {
            const VolumeReport r = polytope_volume(everest_polytope(params));
            return *r.volume;
        }
        case VolumeMethod::Lifting: {
            const std::size_t n = params.n, s = params.s, d = (n + 1) * s;
            const SeSquare sq = se_square_matrices(params);
            const Polytope simp = simplotope(n + 1, s);
            std::vector<QVector> pts;
            for (const auto& v : simp.vertices()) pts.push_back(sq.square * v);
            const Spine spine = Spine::make(Polytope::make(std::move(pts)), simplotope_spine_indices(n + 1, s));
            const Rational vol_p = *polytope_volume(spine.polytope()).volume;
            const auto vol_u = exact_sqrt(gram_sq_volume(spine.points(), s));
            if (!vol_u) throw InternalError("transformed spine volume is irrational");
            return binomial(static_cast<unsigned>(d), static_cast<unsigned>(s)) * vol_p / *vol_u;
        }
    }
    throw Error("unknown volume method");
}

std::vector<NamedCheck> verify_everest(const EverestParams& params) {
    const std::size_t n = params.n, s = params.s;
    std::vector<NamedCheck> out;
    const VertexFamilies f = vertex_families(params);

    out.push_back(check("|V_minus_one| = (s+1)^n", f.minus_one.points.size() == expected_minus_one_size(params)));
    out.push_back(check("|V_zero| = s+1", f.zero.points.size() == expected_zero_size(params)));
    out.push_back(check("|V_one| = s(s+1)^n - s + 1", f.one.points.size() == expected_one_size(params)));
    out.push_back(check("|V(E)| = (s+1)^(n+1) - s - 1", f.everest.points.size() == expected_everest_size(params)));

    const auto m1 = as_set(f.minus_one.points), z = as_set(f.zero.points), o = as_set(f.one.points);
    std::vector<QVector> meet;
    std::set_intersection(o.begin(), o.end(), m1.begin(), m1.end(), std::back_inserter(meet));
    out.push_back(check("V_one meets V_minus_one only in 0", meet.size() == 1 && meet[0].is_zero()));
    out.push_back(check("V_zero within V_minus_one", std::includes(m1.begin(), m1.end(), z.begin(), z.end())));

    bool rules = true;
    for (const auto& v : f.minus_one.points) rules = rules && matches_minus_one_rules(params, v);
    for (const auto& v : f.zero.points) rules = rules && matches_zero_rules(params, v);
    for (const auto& v : f.one.points) rules = rules && matches_one_rules(params, v);
    if (params.dim() <= 8) {
        // Conversely, every point of {-1,0,1}^{ns} obeying a rule set is in that family.
        std::size_t c1 = 0, c0 = 0, cp = 0;
        for_each_tuple(params.dim(), 2, [&](const auto& t) {
            QVector x(params.dim());
            for (std::size_t k = 0; k < t.size(); ++k) x[k] = Rational(static_cast<long>(t[k]) - 1);
            c1 += matches_minus_one_rules(params, x);
            c0 += matches_zero_rules(params, x);
            cp += matches_one_rules(params, x);
        });
        rules = rules && c1 == m1.size() && c0 == z.size() && cp == o.size();
    }
    out.push_back(check("entry-wise family characterizations", rules));

    bool g_one = true, g_scaled = true;
    for (const auto& v : f.everest.points) {
        g_one = g_one && g_eval(params, v) == Rational(1);
        g_scaled = g_scaled && g_eval(params, v * Rational(2)) > Rational(1);
    }
    out.push_back(check("g = 1 on every vertex", g_one));
    out.push_back(check("g > 1 on every doubled vertex", g_scaled));
    out.push_back(check("g(0) = 0", g_eval(params, QVector(params.dim())).is_zero()));

    const QMatrix pi = se_matrix(params);
    const auto simp_pts = minus_one_points(n + 1, s), simp_spine = zero_points(n + 1, s);
    const auto spine_set = as_set(simp_spine);
    std::set<QVector> image;
    for (const auto& v : simp_pts)
        if (!spine_set.count(v)) image.insert(pi * v);
    out.push_back(check("image of simplotope vertices off the spine = V(E)", image == as_set(f.everest.points)));
    bool spine_zero = true;
    for (const auto& u : simp_spine) spine_zero = spine_zero && (pi * u).is_zero();
    out.push_back(check("se_matrix kills V_zero", spine_zero));

    std::vector<QVector> nonzero_spine;
    for (const auto& u : simp_spine)
        if (!u.is_zero()) nonzero_spine.push_back(u);
    const auto ker = kernel_basis(pi);
    std::vector<QVector> both = ker;
    both.insert(both.end(), nonzero_spine.begin(), nonzero_spine.end());
    const std::size_t r_spine = rank(QMatrix::from_rows(nonzero_spine));
    out.push_back(check("kernel of se_matrix is spanned by V_zero \\ {0}",
                        ker.size() == r_spine && r_spine == nonzero_spine.size() &&
                            rank(QMatrix::from_rows(both)) == r_spine));

    try {
        const SeSquare sq = se_square_matrices(params);
        out.push_back(check("|det| of the square extension is 1", abs(det(sq.square)) == Rational(1)));
    } catch (const InternalError& e) {
        out.push_back(check("square extension", false, e.what()));
    }

    out.push_back(check("multinomial form equals c(n,s)", c_constant_multinomial(params) == c_constant(params)));

    const Rational c = c_constant(params);
    if (params.dim() <= 4) {
        const Rational hull = everest_volume(params, VolumeMethod::Hull);
        out.push_back(check("hull volume = c(n,s)", hull == c, hull.to_string() + " vs " + c.to_string()));
    }
    if (params.dim() <= 4 && expected_minus_one_size({n + 1, s}) <= max_vertices()) {
        const Rational lifted = everest_volume(params, VolumeMethod::Lifting);
        out.push_back(check("lifting volume = c(n,s)", lifted == c, lifted.to_string() + " vs " + c.to_string()));
    }
    return out;
}

}  // namespace spinaltri
