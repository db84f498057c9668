#include "spinaltri/birkhoff.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "spinaltri/errors.hpp"
#include "spinaltri/limits.hpp"
#include "spinaltri/volume.hpp"

namespace spinaltri {

namespace {

constexpr std::size_t kMaxBirkhoffOrder = 5;

QVector permutation_matrix(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    QVector v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + perm[i]] = 1;
    return v;
}

}  // namespace

QVector cyclic_shift(std::size_t n, std::size_t k) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i + k) % n;
    return permutation_matrix(perm);
}

BirkhoffContext birkhoff_context(std::size_t n) {
    if (n < 2) throw Error("Birkhoff polytope needs n >= 2");
    std::size_t cap = kMaxBirkhoffOrder;
    if (scale_override()) cap = 6;
    require_scale("Birkhoff order n", n, cap);

    BirkhoffContext ctx;
    ctx.n = n;
    const std::size_t m = ctx.m = n - 1;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do ctx.vertices.push_back(permutation_matrix(perm));
    while (std::next_permutation(perm.begin(), perm.end()));

    for (std::size_t k = 0; k < n; ++k) {
        auto it = std::find(ctx.vertices.begin(), ctx.vertices.end(), cyclic_shift(n, k));
        ctx.spine.push_back(static_cast<std::size_t>(it - ctx.vertices.begin()));
    }
    std::sort(ctx.spine.begin(), ctx.spine.end());

    // A_n: block (i, i) = W_n for i < m, every other block X_n = 0.
    ctx.a_mat = QMatrix(m * m, n * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) ctx.a_mat(i * m + j, i * n + j) = 1;

    // B_n: block (i, i) = Y_n for i < m, last block row -Y_n in every column.
    ctx.b_mat = QMatrix(n * n, m * m);
    for (std::size_t blk = 0; blk < m; ++blk)
        for (std::size_t j = 0; j < m; ++j) {
            ctx.b_mat(blk * n + j, blk * m + j) = 1;
            ctx.b_mat(blk * n + m, blk * m + j) = -1;
            ctx.b_mat(m * n + j, blk * m + j) = -1;
            ctx.b_mat(m * n + m, blk * m + j) = 1;
        }

    // C_n rows: e(2..n), e(1)+...+e(n), then -e(t)+e(n+t) for t = 1..m^2-n (1-based units).
    // The rows need m^2 >= n, so n = 2 gets C_2 = I_1 and b_2 = 0.
    const std::size_t mm = m * m;
    ctx.c_mat = n >= 3 ? QMatrix(mm, mm) : QMatrix::identity(mm);
    ctx.b_vec = QVector(mm);
    if (n >= 3) {
        for (std::size_t r = 0; r < m; ++r) ctx.c_mat(r, r + 1) = 1;
        for (std::size_t c = 0; c < n; ++c) ctx.c_mat(m, c) = 1;
        for (std::size_t t = 1; t <= mm - n; ++t) {
            ctx.c_mat(m + t, t - 1) = -1;
            ctx.c_mat(m + t, n + t - 1) = 1;
        }
        ctx.b_vec[n - 1] = -1;
    }

    ctx.d_mat = QMatrix(m * (m - 1), mm);
    for (std::size_t r = 0; r < m * (m - 1); ++r) ctx.d_mat(r, m + r) = 1;

    ctx.a_vec = QVector(n * n);
    for (std::size_t i = 0; i < m; ++i) ctx.a_vec[i * n + m] = 1;
    for (std::size_t j = 0; j < m; ++j) ctx.a_vec[m * n + j] = 1;
    ctx.a_vec[m * n + m] = Rational(-static_cast<long>(n - 2));

    ctx.j_mat = QMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) ctx.j_mat(i, j) = i == j ? 2 : 1;

    for (const auto& v : ctx.vertices)
        if (ctx.b_mat * (ctx.a_mat * v) + ctx.a_vec != v)
            throw InternalError("B_n A_n v + a_n != v for vertex " + v.to_string());

    if (n >= 3) {
        std::set<QVector> got, want{QVector(mm)};
        for (auto i : ctx.spine) got.insert(ctx.c_mat * (ctx.a_mat * ctx.vertices[i]) + ctx.b_vec);
        for (std::size_t i = 0; i < m; ++i) want.insert(QVector::unit(mm, i));
        if (got != want) throw InternalError("C_n A_n U_n + b_n is not {0, e_1, ..., e_m}");
    }
    return ctx;
}

QMatrix doubled_diagonal_blocks(const QMatrix& a, std::size_t copies) {
    if (a.rows() != a.cols()) throw DimensionError("block matrix needs a square block");
    const std::size_t k = a.rows();
    QMatrix out(k * copies, k * copies);
    for (std::size_t bi = 0; bi < copies; ++bi)
        for (std::size_t bj = 0; bj < copies; ++bj)
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    out(bi * k + r, bj * k + c) = bi == bj ? a(r, c) * Rational(2) : a(r, c);
    return out;
}

bool block_determinant_identity(const QMatrix& a, std::size_t copies) {
    const Rational lhs = det(doubled_diagonal_blocks(a, copies));
    const Rational rhs = pow(Rational(static_cast<long>(copies + 1)), static_cast<unsigned>(a.rows())) *
                         pow(det(a), static_cast<unsigned>(copies));
    return lhs == rhs;
}

std::vector<NamedCheck> determinant_identities(const BirkhoffContext& ctx) {
    const auto n = static_cast<long>(ctx.n);
    const auto m = static_cast<unsigned>(ctx.m);
    std::vector<NamedCheck> out;
    const QMatrix btb = ctx.b_mat.transposed() * ctx.b_mat;
    const Rational d_btb = det(btb);
    out.push_back({"det(B^T B) = n^(2m)", d_btb == pow(Rational(n), 2 * m), d_btb.to_string()});
    out.push_back({"B^T B has blocks 2J / J", btb == doubled_diagonal_blocks(ctx.j_mat, ctx.m), {}});
    const Rational d_c = det(ctx.c_mat);
    out.push_back({"|det(C)| = 1", abs(d_c) == Rational(1), d_c.to_string()});
    const Rational d_j = det(ctx.j_mat);
    out.push_back({"det(J) = n", d_j == Rational(n), d_j.to_string()});
    out.push_back({"block determinant identity on J", block_determinant_identity(ctx.j_mat, ctx.m), {}});
    return out;
}

std::vector<QVector> normalized_images(const BirkhoffContext& ctx) {
    std::vector<QVector> out;
    for (const auto& v : ctx.vertices) out.push_back(ctx.c_mat * (ctx.a_mat * v) + ctx.b_vec);
    return out;
}

std::vector<QVector> projected_images(const BirkhoffContext& ctx) {
    if (ctx.n < 3) throw DimensionError("projected Birkhoff polytope is 0-dimensional for n = 2");
    std::vector<QVector> out;
    for (const auto& w : normalized_images(ctx)) out.push_back(ctx.d_mat * w);
    return out;
}

Polytope projected_birkhoff(const BirkhoffContext& ctx) { return Polytope::make(extreme_points(projected_images(ctx))); }

BirkhoffVolumeReport verify_birkhoff_volume_relation(const BirkhoffContext& ctx, bool allow_long) {
    if (ctx.n < 3) throw DimensionError("volume relation needs n >= 3");
    if (ctx.n > 4 || (ctx.n == 4 && !allow_long))
        throw ScaleError("Birkhoff volume relation runs for n = 3, or n = 4 with the long flag");
    const auto n = static_cast<long>(ctx.n);
    const auto m = static_cast<unsigned>(ctx.m);
    BirkhoffVolumeReport r;

    std::vector<QVector> ab;
    for (const auto& v : ctx.vertices) ab.push_back(ctx.a_mat * v);
    const Polytope pab = Polytope::make(std::move(ab));
    if (!pab.full_dimensional()) throw InternalError("A_n B_n is not full-dimensional");
    r.vol_ab = *polytope_volume(pab).volume;
    r.vol_b = pow(Rational(n), m) * r.vol_ab;
    r.vol_b_gram_sq = polytope_volume(Polytope::make(ctx.vertices)).sq_volume;
    r.gram_agrees = r.vol_b * r.vol_b == r.vol_b_gram_sq;

    const Polytope hat = projected_birkhoff(ctx);
    if (!hat.full_dimensional()) throw InternalError("projected Birkhoff polytope is not full-dimensional");
    r.vol_hat = *polytope_volume(hat).volume;
    r.lhs = binomial(m * m, m) * r.vol_b;
    r.rhs = r.vol_hat * pow(Rational(n), m) / factorial(m);
    r.relation_holds = r.lhs == r.rhs;

    r.origin_interior = true;
    for (const auto& f : hat.facets()) r.origin_interior = r.origin_interior && f.offset > Rational(0);

    const Spine spine = Spine::make(Polytope::make(normalized_images(ctx)), ctx.spine);
    r.lifting_agrees = static_cast<bool>(verify_lifting_relation(spine));
    return r;
}

}  // namespace spinaltri
