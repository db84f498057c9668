#pragma once

#include <cstddef>
#include <vector>

#include "spinaltri/everest.hpp"
#include "spinaltri/polytope.hpp"
#include "spinaltri/spine.hpp"

namespace spinaltri {

// n x n matrices are flattened row-major into R^{n^2}. m = n - 1 throughout.
struct BirkhoffContext {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<QVector> vertices;  // permutation matrices, permutations in lexicographic order
    IndexSet spine;                 // indices of u^0, ..., u^{n-1}, sorted
    QMatrix a_mat;                  // A_n, m^2 x n^2: drops the last row and column
    QMatrix b_mat;                  // B_n, n^2 x m^2: restores them up to the shift a_vec
    QMatrix c_mat;                  // C_n, m^2 x m^2 (I_1 for n = 2)
    QMatrix d_mat;                  // D_n, m(m-1) x m^2: drops the first m coordinates
    QVector a_vec;                  // a_n
    QVector b_vec;                  // b_n = -e(n) (0 for n = 2)
    QMatrix j_mat;                  // J_n = I_m + all-ones
};

/// Builds every matrix and checks B_n A_n v + a_n = v on all vertices and
/// C_n A_n U_n + b_n = {0, e_1, ..., e_m}; throws InternalError if either fails.
/// Requires 2 <= n <= 5 (n = 6 with the scale override).
BirkhoffContext birkhoff_context(std::size_t n);

/// Permutation matrix of the cyclic shift u raised to the k-th power: ones at (i, i+k mod n).
QVector cyclic_shift(std::size_t n, std::size_t k);

/// Block matrix with 2A on the diagonal and A elsewhere, `copies` blocks per side.
QMatrix doubled_diagonal_blocks(const QMatrix& a, std::size_t copies);

/// det(doubled_diagonal_blocks(a, copies)) == (copies+1)^rows(a) * det(a)^copies.
bool block_determinant_identity(const QMatrix& a, std::size_t copies);

/// det(B^T B) = n^{2m}, B^T B = doubled_diagonal_blocks(J, m), |det C| = 1,
/// det J = n, and the block-determinant identity on J.
std::vector<NamedCheck> determinant_identities(const BirkhoffContext& ctx);

/// C_n A_n v + b_n for every vertex v, in vertex order.
std::vector<QVector> normalized_images(const BirkhoffContext& ctx);

/// D_n applied to normalized_images, in vertex order (duplicates kept).
std::vector<QVector> projected_images(const BirkhoffContext& ctx);

/// Extreme points of projected_images. Throws DimensionError for n = 2.
Polytope projected_birkhoff(const BirkhoffContext& ctx);

struct BirkhoffVolumeReport {
    Rational vol_ab;         // vol(A_n B_n), full-dimensional in R^{m^2}
    Rational vol_b;          // n^m vol(A_n B_n)
    Rational vol_b_gram_sq;  // squared (m^2)-volume of B_n measured directly in R^{n^2}
    Rational vol_hat;        // vol of the projected polytope in R^{m(m-1)}
    Rational lhs;            // C(m^2, m) vol(B_n)
    Rational rhs;            // vol_hat n^m / m!
    bool relation_holds = false;
    bool gram_agrees = false;     // vol_b^2 == vol_b_gram_sq
    bool lifting_agrees = false;  // lifting relation on C A B + b with spine {0, e_1..e_m}
    bool origin_interior = false;
    explicit operator bool() const { return relation_holds && gram_agrees && lifting_agrees && origin_interior; }
};

/// n = 3 always; n = 4 only with allow_long. Throws ScaleError otherwise.
BirkhoffVolumeReport verify_birkhoff_volume_relation(const BirkhoffContext& ctx, bool allow_long = false);

}  // namespace spinaltri
