#include <doctest.h>

#include <random>

#include "spinaltri/errors.hpp"
#include "spinaltri/linalg.hpp"
#include "spinaltri/lp.hpp"
#include "spinaltri/rational.hpp"
#include "support.hpp"

using namespace spinaltri;
using namespace testing_support;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse("0/5").to_string() == "0");
    CHECK(Rational::parse("-0").to_string() == "0");
    CHECK(Rational::parse("12").is_integer());
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("rational helpers") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(6) == Rational(720));
    CHECK(binomial(6, 2) == Rational(15));
    CHECK(binomial(4, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        QMatrix m = random_matrix(rng, n, n, -4, 4);
        if (trial % 3 == 0)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) *= Rational(1, 1 + static_cast<long>((r + c) % 3));
        CHECK(det(m) == laplace_det(m));
    }
}

TEST_CASE("determinant of singular and empty matrices") {
    CHECK(det(QMatrix{{1, 2}, {2, 4}}) == Rational(0));
    CHECK(det(QMatrix(0, 0)) == Rational(1));
    CHECK(det(QMatrix::identity(4)) == Rational(1));
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const QMatrix a = random_matrix(rng, n, n, -3, 3);
        const QMatrix b = random_matrix(rng, n, n, -3, 3);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transposed()) == det(a));
    }
}

TEST_CASE("rank plus kernel dimension equals column count") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
        QMatrix m = random_matrix(rng, rows, cols, -2, 2);
        if (trial % 2 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2);
        const auto kernel = kernel_basis(m);
        CHECK(rank(m) == gauss_rank(m));
        CHECK(rank(m) + kernel.size() == cols);
        for (const auto& v : kernel) CHECK((m * v).is_zero());
        CHECK(gauss_rank(QMatrix::from_columns(kernel).transposed()) == kernel.size());
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const QMatrix m = random_matrix(rng, n, n, -5, 5);
        if (det(m).is_zero()) {
            CHECK_THROWS_AS(inverse(m), Error);
            continue;
        }
        CHECK(m * inverse(m) == QMatrix::identity(n));
    }
}

TEST_CASE("incremental echelon reports rank and |det|") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const QMatrix m = random_matrix(rng, n, n, -3, 3);
        IncrementalEchelon e(n);
        for (std::size_t r = 0; r < n; ++r) e.add(m.row(r));
        CHECK(e.rank() == gauss_rank(m));
        if (e.rank() == n) CHECK(e.abs_pivot_product() == abs(laplace_det(m)));
        CHECK_FALSE(e.add(QVector(n)));
    }
}

TEST_CASE("gram squared volume") {
    // right triangle with legs 1 and 2 inside R^3
    const auto tri = points({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}});
    CHECK(gram_sq_volume(tri, 2) == Rational(1));
    const auto seg = points({{0, 0, 0}, {1, 1, 1}});
    CHECK(gram_sq_volume(seg, 1) == Rational(3));

    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + trial % 4;
        std::vector<QVector> simplex;
        for (std::size_t i = 0; i <= d; ++i) simplex.push_back(random_vector(rng, d, -3, 3));
        QMatrix edges(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < d; ++c) edges(i, c) = simplex[i + 1][c] - simplex[0][c];
        const Rational v = laplace_det(edges) / factorial(static_cast<unsigned>(d));
        CHECK(gram_sq_volume(simplex, d) == v * v);
        std::shuffle(simplex.begin(), simplex.end(), rng);
        CHECK(gram_sq_volume(simplex, d) == v * v);
    }
}

TEST_CASE("affine frame") {
    SUBCASE("full-dimensional sets use the identity frame") {
        const auto f = AffineFrame::of(points({{0, 0}, {1, 0}, {0, 1}}));
        CHECK(f.is_identity());
        CHECK(f.dim() == 2);
        CHECK(f.gram() == Rational(1));
    }
    SUBCASE("local coordinates round trip and gram is order and coordinate invariant") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<QVector> pts;
            const QVector o = random_vector(rng, 4, -2, 2);
            const QVector u = random_vector(rng, 4, -2, 2), w = random_vector(rng, 4, -2, 2);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) pts.push_back(o + Rational(a) * u + Rational(b) * w);
            const auto frame = AffineFrame::of(pts);
            CHECK(frame.dim() == affine_dimension(pts));
            for (const auto& p : pts) {
                CHECK(frame.contains(p));
                CHECK(frame.to_ambient(frame.to_local(p)) == p);
            }
            if (frame.dim() == 2) {
                const QVector off = o + u + u + w + random_vector(rng, 4, 1, 1);
                if (!frame.contains(off)) CHECK_THROWS_AS(frame.to_local(off), DimensionError);
            }
            // squared measure of the parallelogram spanned by the first points
            // does not depend on which frame is chosen
            auto shuffled = pts;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            const auto other = AffineFrame::of(shuffled);
            const std::size_t k = frame.dim();
            std::vector<QVector> probe(pts.begin(), pts.begin() + static_cast<long>(k + 1));
            if (affine_dimension(probe) != k) continue;
            auto local_sq = [&](const AffineFrame& f) {
                QMatrix e(k, k);
                for (std::size_t i = 0; i < k; ++i) {
                    const QVector li = f.to_local(probe[i + 1]) - f.to_local(probe[0]);
                    for (std::size_t c = 0; c < k; ++c) e(i, c) = li[c];
                }
                const Rational dd = laplace_det(e);
                return dd * dd * f.gram();
            };
            const Rational expected = local_sq(frame);
            CHECK(local_sq(other) == expected);
            CHECK(expected == gram_sq_volume(probe, k) * factorial(static_cast<unsigned>(k)) *
                                  factorial(static_cast<unsigned>(k)));
            for (auto& p : probe) std::swap(p[0], p[3]);
            CHECK(local_sq(AffineFrame::of(probe)) == expected);
        }
    }
}

namespace {

LinearConstraint c1(long a, long rhs, Relation rel) { return {vec({a}), Rational(rhs), rel}; }

// Feasibility of a system in one variable by interval intersection.
bool interval_oracle(const std::vector<LinearConstraint>& cs) {
    Rational lo, hi;
    bool has_lo = false, has_hi = false, lo_open = false, hi_open = false;
    auto tighten_hi = [&](const Rational& v, bool open) {
        if (!has_hi || v < hi) hi = v, hi_open = open;
        else if (v == hi) hi_open = hi_open || open;
        has_hi = true;
    };
    auto tighten_lo = [&](const Rational& v, bool open) {
        if (!has_lo || v > lo) lo = v, lo_open = open;
        else if (v == lo) lo_open = lo_open || open;
        has_lo = true;
    };
    for (const auto& c : cs) {
        const Rational a = c.a[0];
        if (a.is_zero()) {
            const bool ok = c.relation == Relation::Equal  ? c.rhs.is_zero()
                            : c.relation == Relation::Less ? Rational(0) < c.rhs
                                                           : Rational(0) <= c.rhs;
            if (!ok) return false;
            continue;
        }
        const Rational v = c.rhs / a;
        const bool open = c.relation == Relation::Less;
        if (c.relation == Relation::Equal) {
            tighten_hi(v, false);
            tighten_lo(v, false);
        } else if (a > Rational(0)) {
            tighten_hi(v, open);
        } else {
            tighten_lo(v, open);
        }
    }
    if (!has_lo || !has_hi) return true;
    if (lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
}

}  // namespace

TEST_CASE("lp feasibility") {
    CHECK(lp_feasible({c1(1, 1, Relation::LessEqual), c1(-1, -1, Relation::LessEqual)}));
    CHECK_FALSE(lp_feasible({c1(1, 1, Relation::Less), c1(-1, -1, Relation::LessEqual)}));
    CHECK(lp_feasible({c1(1, 1, Relation::Less), c1(-1, 0, Relation::Less)}));
    CHECK_FALSE(lp_feasible({c1(1, 0, Relation::Less), c1(-1, 0, Relation::Less)}));
    CHECK(lp_feasible({}));

    std::mt19937_64 rng(18);
    std::uniform_int_distribution<long> coef(-2, 2), rhs(-3, 3), rel(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LinearConstraint> cs;
        const int k = 1 + trial % 4;
        for (int i = 0; i < k; ++i) cs.push_back(c1(coef(rng), rhs(rng), static_cast<Relation>(rel(rng))));
        CHECK(lp_feasible(cs) == interval_oracle(cs));
    }
}

TEST_CASE("standard-form feasibility") {
    // y1 + y2 = 1, y >= 0
    const QMatrix a{{1, 1}};
    CHECK(feasible_nonnegative(a, vec({1}), {true, true}));
    CHECK_FALSE(feasible_nonnegative(a, vec({0}), {true, false}));
    CHECK(feasible_nonnegative(a, vec({0}), {false, false}));
    CHECK_FALSE(feasible_nonnegative(a, vec({-1}), {false, false}));
    // the point (1,1) is in the open triangle (0,0),(3,0),(0,3)
    const QMatrix tri{{0, 3, 0}, {0, 0, 3}, {1, 1, 1}};
    CHECK(feasible_nonnegative(tri, vec({1, 1, 1}), {true, true, true}));
    CHECK_FALSE(feasible_nonnegative(tri, vec({0, 1, 1}), {true, true, true}));
    CHECK(feasible_nonnegative(tri, vec({0, 1, 1}), {false, false, false}));
}
