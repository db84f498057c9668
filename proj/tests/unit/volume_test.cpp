#include <doctest.h>

#include <random>

#include "spinaltri/acceptance.hpp"
#include "spinaltri/errors.hpp"
#include "spinaltri/everest.hpp"
#include "spinaltri/volume.hpp"
#include "support.hpp"

using namespace spinaltri;
using namespace testing_support;

TEST_CASE("volumes of standard shapes") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto cube = polytope_volume(Polytope::make(fixtures::hypercube(d)));
        CHECK(cube.volume == Rational(1));
        CHECK(cube.sq_volume == Rational(1));
        CHECK(cube.dim == d);
        CHECK(cube.n_simplices == static_cast<std::size_t>(factorial(static_cast<unsigned>(d)).numerator().get_ui()));
        const auto simplex = polytope_volume(Polytope::make(fixtures::standard_simplex(d)));
        CHECK(simplex.volume == Rational(1) / factorial(static_cast<unsigned>(d)));
        CHECK(simplex.n_simplices == 1);
    }
    // cross-polytope in R^3
    const auto oct = polytope_volume(
        Polytope::make(points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})));
    CHECK(oct.volume == Rational(4, 3));
}

TEST_CASE("polygon volume agrees with the shoelace formula") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = fixtures::random_polytope(rng, 2, 10, 6);
        CHECK(polytope_volume(Polytope::make(pts)).volume == polygon_area(pts));
    }
}

TEST_CASE("volume does not depend on the pulling order") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const Polytope p = Polytope::make(fixtures::random_polytope(rng, d, 9, 3));
        const Rational ref = flag_volume(p);
        for (int k = 0; k < 4; ++k) CHECK(polytope_volume(p, random_permutation(rng, p.size())).volume == ref);
    }
}

TEST_CASE("lower-dimensional polytopes report squared volume") {
    // tilted unit square: sides (1,0,0) and (0,1,1), area sqrt(2)
    const Polytope sq = Polytope::make(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 1}}));
    const auto r = polytope_volume(sq);
    CHECK_FALSE(r.volume.has_value());
    CHECK(r.sq_volume == Rational(2));
    CHECK(r.dim == 2);
    // segment from (0,0,0) to (1,2,2) has length 3
    const auto seg = polytope_volume(Polytope::make(points({{0, 0, 0}, {1, 2, 2}})));
    CHECK(seg.sq_volume == Rational(9));
    const auto pt = polytope_volume(Polytope::make(points({{5, 5}})));
    CHECK(pt.volume == Rational(0));
    CHECK(pt.n_simplices == 0);
}

TEST_CASE("triangulation volume") {
    const Polytope p = simplotope(2, 2);
    const Triangulation t = pulling_triangulation(p);
    CHECK(triangulation_volume(t, p).volume == Rational(1, 4));
    CHECK(triangulation_volume(t, p).n_simplices == t.size());
}

TEST_CASE("lifting relation on the cube diagonals") {
    const Polytope cube = Polytope::make(fixtures::hypercube(3));
    for (std::size_t k = 0; k < 4; ++k) {
        const LiftingReport r = verify_lifting_relation(Spine::make(cube, {k, 7 - k}));
        CHECK(r.d == 3);
        CHECK(r.n == 2);
        CHECK(r.e == 2);
        CHECK(r.binom == Rational(3));
        CHECK(r.vol_p_sq == Rational(1));
        CHECK(r.vol_u_sq == Rational(3));
        // regular hexagon of side sqrt(2/3): area (3 sqrt 3 / 2)(2/3) = sqrt 3
        CHECK(r.vol_shadow_sq == Rational(3));
        CHECK(r.shadow_vertices == 6);
        CHECK(static_cast<bool>(r));
    }
}

TEST_CASE("lifting relation on enumerated spines") {
    std::vector<Polytope> cases{simplotope(2, 2), simplotope(3, 1), Polytope::make(fixtures::standard_simplex(3)),
                                Polytope::make(fixtures::hypercube(2))};
    std::mt19937_64 rng(53);
    for (int i = 0; i < 6; ++i) cases.push_back(Polytope::make(fixtures::random_polytope(rng, 2 + i % 2, 7, 2)));
    std::size_t checked = 0;
    for (const auto& p : cases) {
        for (const auto& u : enumerate_spines(p, 2)) {
            const Spine s = Spine::make(p, u);
            const LiftingReport r = verify_lifting_relation(s);
            CHECK(r.relation_holds);
            CHECK(r.simplices_hold);
            CHECK(r.binom == binomial(static_cast<unsigned>(p.dim()), static_cast<unsigned>(u.size() - 1)));
            const ShadowMap sm = shadow(s);
            const Triangulation t = spinal_triangulation(s);
            for (const auto& sigma : t.simplices()) CHECK(simplex_lifting_identity(s, sigma, sm));
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("simplex spine leaves a point shadow") {
    const Polytope tri = Polytope::make(points({{0, 0}, {2, 0}, {0, 3}}));
    const LiftingReport r = verify_lifting_relation(Spine::make(tri, {0, 1, 2}));
    CHECK(r.e == 0);
    CHECK(r.vol_shadow_sq == Rational(1));
    CHECK(r.vol_p_sq == Rational(9));
    CHECK(r.vol_u_sq == Rational(9));
    CHECK(r.binom == Rational(1));
    CHECK(r.relation_holds);
}

TEST_CASE("lifting relation needs two spine points") {
    const Polytope cube = Polytope::make(fixtures::hypercube(3));
    CHECK_THROWS_AS(verify_lifting_relation(Spine::make(cube, {0})), Error);
}
