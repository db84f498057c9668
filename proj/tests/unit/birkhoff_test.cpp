#include <doctest.h>

#include <random>

#include "spinaltri/acceptance.hpp"
#include "spinaltri/birkhoff.hpp"
#include "spinaltri/errors.hpp"
#include "spinaltri/linalg.hpp"
#include "spinaltri/triangulation.hpp"
#include "support.hpp"

using namespace spinaltri;
using namespace testing_support;

TEST_CASE("n = 3 matrices written out") {
    const BirkhoffContext c = birkhoff_context(3);
    CHECK(c.m == 2);
    CHECK(c.vertices.size() == 6);
    // permutations 012, 021, 102, 120, 201, 210
    CHECK(c.vertices[1] == vec({1, 0, 0, 0, 0, 1, 0, 1, 0}));
    CHECK(c.vertices[3] == vec({0, 1, 0, 0, 0, 1, 1, 0, 0}));
    CHECK(c.spine == IndexSet{0, 3, 4});

    const QMatrix a{{1, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0, 0}};
    const QMatrix b{{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                    {0, 0, -1, -1}, {-1, 0, -1, 0}, {0, -1, 0, -1}, {1, 1, 1, 1}};
    const QMatrix cm{{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}, {-1, 0, 0, 1}};
    const QMatrix d{{0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(c.a_mat == a);
    CHECK(c.b_mat == b);
    CHECK(c.c_mat == cm);
    CHECK(c.d_mat == d);
    CHECK(c.a_vec == vec({0, 0, 1, 0, 0, 1, 1, 1, -1}));
    CHECK(c.b_vec == vec({0, 0, -1, 0}));
    CHECK(c.j_mat == (QMatrix{{2, 1}, {1, 2}}));

    for (const auto& v : c.vertices) CHECK(b * (a * v) + c.a_vec == v);
    CHECK(normalized_images(c)[0] == vec({0, 0, 0, 0}));
    CHECK(normalized_images(c)[3] == vec({1, 0, 0, 0}));
    CHECK(normalized_images(c)[4] == vec({0, 1, 0, 0}));
    CHECK(projected_images(c) ==
          points({{0, 0}, {0, -1}, {1, 0}, {0, 0}, {0, 0}, {-1, 1}}));

    const Polytope hat = projected_birkhoff(c);
    CHECK(as_set(hat.vertices()) == as_set(points({{0, -1}, {1, 0}, {-1, 1}})));
    CHECK(polygon_area(hat.vertices()) == Rational(3, 2));
}

TEST_CASE("cyclic shifts") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const BirkhoffContext c = birkhoff_context(n);
        CHECK(c.vertices.size() == static_cast<std::size_t>(factorial(static_cast<unsigned>(n)).numerator().get_ui()));
        CHECK(c.spine.size() == n);
        for (std::size_t k = 0; k < n; ++k) {
            const QVector u = cyclic_shift(n, k);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK(u[i * n + j] == Rational(j == (i + k) % n ? 1 : 0));
            CHECK(std::count(c.vertices.begin(), c.vertices.end(), u) == 1);
        }
        if (n <= 3) CHECK(is_spine(Polytope::make(c.vertices), c.spine));
    }
}

TEST_CASE("determinant identities") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const BirkhoffContext c = birkhoff_context(n);
        for (const auto& check : determinant_identities(c)) {
            CAPTURE(n);
            CAPTURE(check.name);
            CHECK(check.passed);
        }
        const Rational n_r(static_cast<long>(n));
        CHECK(det(c.b_mat.transposed() * c.b_mat) == pow(n_r, static_cast<unsigned>(2 * c.m)));
        CHECK(abs(det(c.c_mat)) == Rational(1));
        CHECK(det(c.j_mat) == n_r);
    }
    CHECK(laplace_det(birkhoff_context(3).j_mat) == Rational(3));
    CHECK(laplace_det(birkhoff_context(3).b_mat.transposed() * birkhoff_context(3).b_mat) == Rational(81));
}

TEST_CASE("block determinant lemma on random matrices") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t k = 1 + trial % 2, copies = 1 + trial % 3;
        const QMatrix a = random_matrix(rng, k, k, -3, 3);
        const QMatrix blocks = doubled_diagonal_blocks(a, copies);
        CHECK(blocks.rows() == k * copies);
        CHECK(block_determinant_identity(a, copies));
        const Rational expected = pow(Rational(static_cast<long>(copies + 1)), static_cast<unsigned>(k)) *
                                  pow(laplace_det(a), static_cast<unsigned>(copies));
        CHECK(laplace_det(blocks) == expected);
    }
}

TEST_CASE("projected B_4 matches the reference vertex list") {
    const Polytope hat = projected_birkhoff(birkhoff_context(4));
    std::vector<QVector> golden;
    for (const auto& m : fixtures::projected_b4_golden()) {
        QVector v(6);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 3; ++c) v[r * 3 + c] = Rational(m[r][c]);
        golden.push_back(v);
    }
    CHECK(golden.size() == 20);
    CHECK(as_set(hat.vertices()) == as_set(golden));
}

TEST_CASE("B_3 volume relation") {
    const BirkhoffContext c = birkhoff_context(3);
    const BirkhoffVolumeReport r = verify_birkhoff_volume_relation(c);
    CHECK(static_cast<bool>(r));
    CHECK(r.vol_hat == Rational(3, 2));
    CHECK(r.vol_b == Rational(9) * r.vol_ab);
    CHECK(r.lhs == binomial(4, 2) * r.vol_b);
    CHECK(r.rhs == r.vol_hat * Rational(9) / Rational(2));
    CHECK(r.lhs == r.rhs);

    // vol(A_3 B_3) recomputed from cofactor determinants over a validated triangulation
    std::vector<QVector> stretched;
    for (const auto& v : c.vertices) stretched.push_back(c.a_mat * v);
    const Polytope ab = Polytope::make(stretched);
    const Triangulation t = pulling_triangulation(ab);
    REQUIRE(validate(t, ab).valid);
    Rational vol;
    for (const auto& s : t.simplices()) {
        QMatrix e(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k) e(i, k) = stretched[s[i + 1]][k] - stretched[s[0]][k];
        vol += abs(laplace_det(e)) / Rational(24);
    }
    CHECK(vol == r.vol_ab);
    CHECK(vol == Rational(1, 8));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(birkhoff_context(1), Error);
    CHECK_THROWS_AS(birkhoff_context(6), ScaleError);
    CHECK_THROWS_AS(projected_birkhoff(birkhoff_context(2)), DimensionError);
    CHECK_THROWS_AS(verify_birkhoff_volume_relation(birkhoff_context(4)), ScaleError);
}
