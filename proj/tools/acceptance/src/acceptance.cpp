#include "spinaltri/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "spinaltri/birkhoff.hpp"
#include "spinaltri/everest.hpp"
#include "spinaltri/volume.hpp"

namespace spinaltri {

namespace fixtures {

std::vector<QVector> hypercube(std::size_t d) {
    std::vector<QVector> out;
    for (std::size_t k = 0; k < (std::size_t{1} << d); ++k) {
        QVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<long>((k >> i) & 1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVector> standard_simplex(std::size_t d) {
    std::vector<QVector> out{QVector(d)};
    for (std::size_t i = 0; i < d; ++i) out.push_back(QVector::unit(d, i));
    return out;
}

std::vector<QVector> random_polytope(std::mt19937_64& rng, std::size_t d, std::size_t max_points, long r) {
    std::uniform_int_distribution<long> coord(-r, r);
    std::uniform_int_distribution<std::size_t> count(d + 1, std::max(d + 1, max_points));
    while (true) {
        std::vector<QVector> pts(count(rng), QVector(d));
        for (auto& p : pts)
            for (std::size_t i = 0; i < d; ++i) p[i] = coord(rng);
        auto ext = extreme_points(pts);
        if (ext.size() >= d + 1 && affine_dimension(ext) == d) return ext;
    }
}

const std::vector<std::array<std::array<int, 3>, 2>>& projected_b4_golden() {
    static const std::vector<std::array<std::array<int, 3>, 2>> golden{
        {{{0, 0, 0}, {0, 0, -1}}},   {{{0, -1, 1}, {0, 1, 0}}},   {{{0, -1, 1}, {0, 0, 0}}},
        {{{0, -1, 0}, {0, 1, 0}}},   {{{0, -1, 0}, {0, 0, 1}}},   {{{1, 0, -1}, {0, -1, 1}}},
        {{{1, 0, -1}, {0, -1, 0}}},  {{{0, 0, 0}, {1, 0, 0}}},    {{{0, 0, -1}, {1, 0, 0}}},
        {{{0, 0, -1}, {0, 0, 1}}},   {{{1, 0, 0}, {-1, 0, 0}}},   {{{1, 0, 0}, {-1, -1, 0}}},
        {{{0, 1, 0}, {0, 0, -1}}},   {{{0, 1, 0}, {-1, 0, -1}}},  {{{0, 0, 0}, {-1, 1, 0}}},
        {{{0, 0, 0}, {0, -1, 1}}},   {{{-1, 1, 0}, {1, 0, -1}}},  {{{-1, 1, 0}, {0, 0, 0}}},
        {{{-1, 0, 1}, {1, 0, 0}}},   {{{-1, 0, 1}, {0, 1, 0}}},
    };
    return golden;
}

}  // namespace fixtures

std::vector<Triangulation> star_triangulations_by_order(const std::vector<QVector>& points, std::size_t samples,
                                                        std::uint64_t seed) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Triangulation> found;
    auto record = [&](const std::vector<std::size_t>& o) {
        Triangulation t = star_triangulation(points, o).triangulation;
        if (std::find(found.begin(), found.end(), t) == found.end()) found.push_back(std::move(t));
    };
    if (points.size() <= 7) {
        do record(order);
        while (std::next_permutation(order.begin(), order.end()));
    } else {
        std::mt19937_64 rng(seed);
        record(order);
        for (std::size_t i = 0; i < samples; ++i) {
            std::shuffle(order.begin(), order.end(), rng);
            record(order);
        }
    }
    return found;
}

namespace acceptance {

namespace {

using fixtures::hypercube;

struct Result {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!passed) detail << "; ";
            detail << what;
        }
        passed = passed && ok;
    }
};

const std::vector<std::pair<std::size_t, std::size_t>> kEverestGrid{{1, 1}, {1, 2}, {2, 1}, {2, 2}};

std::set<QVector> as_set(const std::vector<QVector>& v) { return {v.begin(), v.end()}; }

Result everest_volume_criterion() {
    Result r;
    for (auto [n, s] : kEverestGrid) {
        const auto p = EverestParams::make(n, s);
        const Rational hull = everest_volume(p, VolumeMethod::Hull);
        const Rational want = factorial(static_cast<unsigned>((n + 1) * s)) /
                              (factorial(static_cast<unsigned>(n * s)) *
                               pow(factorial(static_cast<unsigned>(s)), static_cast<unsigned>(n + 1)));
        r.require(hull == want, "E(" + std::to_string(n) + "," + std::to_string(s) + ") hull volume " +
                                    hull.to_string() + " != " + want.to_string());
        if (r.passed) r.detail << (r.detail.tellp() > 0 ? ", " : "") << hull.to_string();
    }
    return r;
}

Result everest_counts_criterion() {
    Result r;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t s = 1; s <= 3; ++s) {
            const auto p = EverestParams::make(n, s);
            const auto f = vertex_families(p);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
            r.require(f.minus_one.points.size() == expected_minus_one_size(p), tag + " |V_-1|");
            r.require(f.zero.points.size() == expected_zero_size(p), tag + " |V_0|");
            r.require(f.one.points.size() == expected_one_size(p), tag + " |V_1|");
            r.require(f.everest.points.size() == expected_everest_size(p), tag + " |V(E)|");
            r.require(as_set(f.everest.points).size() == f.everest.points.size(), tag + " repeated vertex");
        }
    if (r.passed) r.detail << "all 9 parameter pairs";
    return r;
}

Result se_transformation_criterion() {
    Result r;
    for (auto [n, s] : kEverestGrid) {
        const auto p = EverestParams::make(n, s);
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
        const QMatrix pi = se_matrix(p);
        const auto big = vertex_families(EverestParams::make(n + 1, s));
        const auto spine = as_set(big.zero.points);
        std::set<QVector> image;
        const Polytope simp = simplotope(n + 1, s);
        for (const auto& v : simp.vertices())
            if (!spine.count(v)) image.insert(pi * v);
        r.require(image == as_set(vertex_families(p).everest.points), tag + " image != V(E)");
        bool zero = true;
        std::vector<QVector> nonzero;
        for (const auto& u : big.zero.points) {
            zero = zero && (pi * u).is_zero();
            if (!u.is_zero()) nonzero.push_back(u);
        }
        r.require(zero, tag + " V_0 not mapped to 0");
        const auto ker = kernel_basis(pi);
        auto both = ker;
        both.insert(both.end(), nonzero.begin(), nonzero.end());
        const std::size_t rk = rank(QMatrix::from_rows(nonzero));
        r.require(ker.size() == rk && rank(QMatrix::from_rows(both)) == rk, tag + " kernel span differs");
    }
    return r;
}

Result lifting_criterion() {
    Result r;
    auto check = [&](const Polytope& p, const IndexSet& u, const std::string& tag) {
        const auto rep = verify_lifting_relation(Spine::make(p, u));
        r.require(static_cast<bool>(rep), tag + " fails");
        return rep;
    };
    const Polytope cube = Polytope::make(hypercube(3));
    for (std::size_t k = 0; k < 4; ++k) {
        const auto rep = check(cube, {k, 7 - k}, "cube diagonal {" + std::to_string(k) + "," + std::to_string(7 - k) + "}");
        r.require(rep.binom * rep.binom * rep.vol_p_sq == Rational(9) && rep.vol_u_sq * rep.vol_shadow_sq == Rational(9),
                  "cube sides differ from 9");
    }
    check(Polytope::make(hypercube(4)), {0, 15}, "4-cube diagonal");
    for (auto [n, s] : kEverestGrid)
        check(simplotope(n + 1, s), simplotope_spine_indices(n + 1, s),
              "S(" + std::to_string(n + 1) + "," + std::to_string(s) + ") with V_0");
    std::size_t enumerated = 0;
    for (const auto& pts : {hypercube(2), hypercube(3), fixtures::standard_simplex(3)}) {
        const Polytope p = Polytope::make(pts);
        for (const auto& u : enumerate_spines(p, 2)) {
            check(p, u, "enumerated spine of a " + std::to_string(p.size()) + "-vertex polytope");
            ++enumerated;
        }
    }
    if (r.passed) r.detail << "cube x4, 4-cube, 4 simplotopes, " << enumerated << " enumerated spines";
    return r;
}

Result bijection_case(const Polytope& p, const IndexSet& u, const std::string& tag, std::size_t& stars_out) {
    Result r;
    const Spine spine = Spine::make(p, u);
    const ShadowMap sm = shadow(spine);
    const Polytope shadow_p = shadow_polytope(sm);
    const Triangulation t = spinal_triangulation(spine);
    const Triangulation folded = fold(t, sm);
    r.require(lift(folded, sm) == t, tag + ": lift(fold(t)) != t");
    r.require(static_cast<bool>(validate(t, p)), tag + ": spinal triangulation invalid");
    r.require(static_cast<bool>(validate(folded, shadow_p)), tag + ": fold invalid");

    const auto stars = star_triangulations_by_order(*sm.table, 400, 7);
    stars_out = stars.size();
    for (const auto& star : stars) {
        const Triangulation lifted = lift(star, sm);
        r.require(fold(lifted, sm) == star, tag + ": fold(lift(star)) != star");
        r.require(static_cast<bool>(validate(star, shadow_p)), tag + ": star invalid");
        r.require(static_cast<bool>(validate(lifted, p)), tag + ": lift invalid");
        r.require(all_simplices_contain(lifted, spine.indices()), tag + ": lift not spinal");
    }
    r.require(stars.size() >= 3, tag + ": only " + std::to_string(stars.size()) +
                                     " distinct star triangulation(s) of the shadow exist (a polygon around an "
                                     "interior point has exactly one)");
    return r;
}

Result bijection_criterion() {
    Result r;
    std::size_t cube_stars = 0, simp_stars = 0, tess_stars = 0;
    Result a = bijection_case(Polytope::make(hypercube(3)), {0, 7}, "cube", cube_stars);
    Result b = bijection_case(simplotope(2, 2), simplotope_spine_indices(2, 2), "S(2,2)", simp_stars);
    r.require(a.passed, a.detail.str());
    r.require(b.passed, b.detail.str());
    Result c = bijection_case(Polytope::make(hypercube(4)), {0, 15}, "4-cube", tess_stars);
    r.detail << (r.passed ? "" : "; ") << "for reference, 4-cube diagonal: " << tess_stars
             << " distinct stars, bijection " << (c.passed ? "holds" : "fails: " + c.detail.str());
    return r;
}

Result cube_spinal_criterion() {
    Result r;
    for (std::size_t d = 2; d <= 4; ++d) {
        const Polytope p = Polytope::make(hypercube(d));
        const std::size_t top = (std::size_t{1} << d) - 1;
        const Triangulation t = spinal_triangulation(Spine::make(p, {0, top}));
        const Rational fact = factorial(static_cast<unsigned>(d));
        r.require(Rational(static_cast<long>(t.size())) == fact,
                  std::to_string(d) + "-cube: " + std::to_string(t.size()) + " simplices");
        r.require(all_simplices_contain(t, {0, top}), std::to_string(d) + "-cube: diagonal missing");
        r.require(static_cast<bool>(validate(t, p)), std::to_string(d) + "-cube: invalid");
    }
    return r;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}

Result birkhoff_identity_criterion() {
    Result r;
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto ctx = birkhoff_context(n);
        const std::string tag = "n=" + std::to_string(n);
        bool roundtrip = true;
        for (const auto& v : ctx.vertices) roundtrip = roundtrip && ctx.b_mat * (ctx.a_mat * v) + ctx.a_vec == v;
        r.require(roundtrip, tag + ": B A v + a != v");
        for (const auto& c : determinant_identities(ctx)) r.require(c.passed, tag + ": " + c.name + " (" + c.detail + ")");
    }
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 20; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(i % 3), copies = 2 + static_cast<std::size_t>(i % 3);
        QMatrix a(m, m);
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) a(x, y) = random_rational(rng);
        r.require(block_determinant_identity(a, copies), "block lemma instance " + std::to_string(i));
    }
    return r;
}

Result projected_b4_criterion() {
    Result r;
    const Polytope hat = projected_birkhoff(birkhoff_context(4));
    std::set<QVector> want;
    for (const auto& g : fixtures::projected_b4_golden()) {
        QVector v(6);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) v[i * 3 + j] = g[i][j];
        want.insert(v);
    }
    r.require(want.size() == 20, "golden list has repeats");
    r.require(as_set(hat.vertices()) == want, std::to_string(hat.size()) + " computed vertices differ from the list");
    return r;
}

Result birkhoff_volume_criterion() {
    Result r;
    const auto rep = verify_birkhoff_volume_relation(birkhoff_context(3));
    r.require(rep.relation_holds, "relation fails: " + rep.lhs.to_string() + " vs " + rep.rhs.to_string());
    r.require(rep.vol_b == Rational(9) * rep.vol_ab, "vol(B3) != 9 vol(A3 B3)");
    r.require(rep.gram_agrees, "direct volume of B3 disagrees");
    r.require(rep.lifting_agrees, "lifting relation on the normalized polytope fails");
    r.require(rep.origin_interior, "origin not interior");
    if (r.passed)
        r.detail << "vol(A3B3) = " << rep.vol_ab << ", vol(B3) = " << rep.vol_b << ", vol(hat B3) = " << rep.vol_hat
                 << ", both sides " << rep.lhs;
    return r;
}

Result validator_criterion() {
    Result r;
    std::mt19937_64 rng(424242);
    std::size_t accepted = 0, dropped = 0, duplicated = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
        const Polytope p = Polytope::make(fixtures::random_polytope(rng, d, 10, 3));
        std::vector<std::size_t> order(p.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const Triangulation t = pulling_triangulation(p, order);
        const auto ok = validate(t, p);
        r.require(ok.valid, "instance " + std::to_string(i) + " rejected: " + ok.diagnostic);
        accepted += ok.valid;

        auto simplices = t.simplices();
        if (simplices.size() >= 2) {
            auto less = simplices;
            less.erase(less.begin() + static_cast<long>(rng() % less.size()));
            const bool caught = !validate_simplices(t.points(), less, p).valid;
            r.require(caught, "instance " + std::to_string(i) + ": dropped simplex accepted");
            dropped += caught;
        }
        auto more = simplices;
        more.push_back(simplices[rng() % simplices.size()]);
        const bool caught = !validate_simplices(t.points(), more, p).valid;
        r.require(caught, "instance " + std::to_string(i) + ": duplicated simplex accepted");
        duplicated += caught;
    }
    if (r.passed)
        r.detail << accepted << " accepted, " << dropped << " dropped-simplex and " << duplicated
                 << " duplicated-simplex corruptions rejected";
    return r;
}

struct Criterion {
    const char* title;
    std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"Everest volume equals the closed form", everest_volume_criterion},
        {"Everest vertex and family counts", everest_counts_criterion},
        {"SE-transformation image, kernel and spine", se_transformation_criterion},
        {"Lifting volume identity (squared)", lifting_criterion},
        {"Fold/lift bijection", bijection_criterion},
        {"Spinal triangulation of the d-cube", cube_spinal_criterion},
        {"Birkhoff determinant identities", birkhoff_identity_criterion},
        {"Projected B4 vertex set", projected_b4_criterion},
        {"Birkhoff volume relation at n=3", birkhoff_volume_criterion},
        {"Triangulation validator properties", validator_criterion},
    };
    return all;
}

}  // namespace

Outcome run_criterion(int id) {
    if (id < 1 || id > kCriteria) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
    Outcome o;
    o.id = id;
    o.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    try {
        Result r = c.run();
        o.passed = r.passed;
        o.detail = r.detail.str();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

std::vector<Outcome> run_all() {
    std::vector<Outcome> out;
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id));
    return out;
}

std::string format(const Outcome& o) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (o.passed ? "PASS" : "FAIL") << "  " << o.id << (o.id < 10 ? "  " : " ") << o.title << " (" << o.seconds
       << " s)";
    if (!o.detail.empty()) os << ": " << o.detail;
    return os.str();
}

}  // namespace acceptance
}  // namespace spinaltri
