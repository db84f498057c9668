#pragma once

#include <cstddef>
#include <vector>

#include "spinaltri/rational.hpp"

namespace spinaltri {

/// Exact determinant. Rows are scaled to integers and eliminated with
/// Bareiss' fraction-free scheme, so intermediate entries stay bounded by
/// Hadamard-type minors instead of growing like naive Gaussian elimination.
Rational det(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Rational basis of {v : m v = 0}, one vector per free column of the RREF.
std::vector<QVector> kernel_basis(const QMatrix& m);

QMatrix inverse(const QMatrix& m);

/// Squared k-volume of the simplex on `points` (k+1 of them): det(G) / (k!)^2
/// with G the Gram matrix of the edges from points[0]. Rational even when the
/// volume itself is not.
Rational gram_sq_volume(const std::vector<QVector>& points, std::size_t k);

/// Affine dimension of a point set (-1 for the empty set is reported as 0 here;
/// callers never pass an empty set).
std::size_t affine_dimension(const std::vector<QVector>& points);

/// Row echelon form built one row at a time. Adding a row reduces it against
/// the rows already present; the product of pivots is the determinant (up to
/// sign) once the rows form a square matrix.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

    /// Returns false (and leaves the state unchanged) if `row` is in the span.
    bool add(const QVector& row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    /// |det| of the square matrix formed by the added rows.
    Rational abs_pivot_product() const;

private:
    std::size_t cols_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinate system of the affine hull of a point set: x = origin + basis * a.
/// For full-dimensional sets the frame is the identity, so local and ambient
/// coordinates agree and local volumes are true volumes.
class AffineFrame {
public:
    AffineFrame() = default;
    static AffineFrame of(const std::vector<QVector>& points);

    std::size_t dim() const { return basis_.cols(); }
    std::size_t ambient_dim() const { return origin_.dim(); }
    bool is_identity() const { return identity_; }

    const QVector& origin() const { return origin_; }
    /// ambient_dim x dim, columns span the direction space.
    const QMatrix& basis() const { return basis_; }

    bool contains(const QVector& x) const;
    /// Throws DimensionError if x is not in the affine hull.
    QVector to_local(const QVector& x) const;
    QVector to_ambient(const QVector& local) const;
    /// Local normal (coefficients over local coordinates) -> ambient normal lying in the direction space.
    QVector normal_to_ambient(const QVector& local_normal) const;

    /// det(B^T B): squared volume scale from local to ambient measure.
    const Rational& gram() const { return gram_; }

private:
    QVector origin_;
    QMatrix basis_;
    QMatrix left_inverse_;  // (B^T B)^{-1} B^T
    Rational gram_{1};
    bool identity_ = true;
};

}  // namespace spinaltri
