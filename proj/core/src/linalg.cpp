#include "spinaltri/linalg.hpp"

#include <utility>

#include "spinaltri/errors.hpp"

namespace spinaltri {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational det(const QMatrix& m) {
    if (!m.is_square()) throw DimensionError("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det(m) = det(M) / prod(scale).
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).raw().get_num() * (l / m(i, j).raw().get_den());
        scale *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    mpq_class result(a[n - 1][n - 1] * sign, scale);
    return Rational(std::move(result));
}

std::size_t rank(const QMatrix& m) {
    QMatrix w = m;
    return rref(w).size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    QMatrix w = m;
    auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DimensionError("inverse of singular matrix");
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

Rational gram_sq_volume(const std::vector<QVector>& points, std::size_t k) {
    if (points.size() != k + 1) throw DimensionError("gram_sq_volume needs k+1 points");
    for (const auto& p : points)
        if (p.dim() != points[0].dim()) throw DimensionError("gram_sq_volume: points of unequal dimension");
    if (k == 0) return Rational(1);
    std::vector<QVector> edges;
    edges.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) edges.push_back(points[i] - points[0]);
    QMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) g(i, j) = g(j, i) = dot(edges[i], edges[j]);
    Rational f = factorial(static_cast<unsigned>(k));
    return det(g) / (f * f);
}

std::size_t affine_dimension(const std::vector<QVector>& points) {
    if (points.size() <= 1) return 0;
    IncrementalEchelon ech(points[0].dim());
    for (std::size_t i = 1; i < points.size(); ++i) ech.add(points[i] - points[0]);
    return ech.rank();
}

bool IncrementalEchelon::add(const QVector& row) {
    if (row.dim() != cols_) throw DimensionError("echelon row dimension mismatch");
    QVector r = row;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t pc = pivots_[i];
        if (r[pc].is_zero()) continue;
        Rational f = r[pc] / rows_[i][pc];
        for (std::size_t j = 0; j < cols_; ++j)
            if (!rows_[i][j].is_zero()) r[j] -= f * rows_[i][j];
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!r[j].is_zero()) {
            rows_.push_back(std::move(r));
            pivots_.push_back(j);
            return true;
        }
    }
    return false;
}

Rational IncrementalEchelon::abs_pivot_product() const {
    Rational p(1);
    for (std::size_t i = 0; i < rows_.size(); ++i) p *= rows_[i][pivots_[i]];
    return abs(p);
}

AffineFrame AffineFrame::of(const std::vector<QVector>& points) {
    if (points.empty()) throw DimensionError("affine frame of an empty point set");
    const std::size_t d = points[0].dim();
    std::vector<QVector> directions;
    IncrementalEchelon ech(d);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].dim() != d) throw DimensionError("points of unequal dimension");
        QVector diff = points[i] - points[0];
        if (ech.add(diff)) directions.push_back(std::move(diff));
    }
    AffineFrame f;
    if (directions.size() == d) {
        f.origin_ = QVector(d);
        f.basis_ = QMatrix::identity(d);
        f.left_inverse_ = QMatrix::identity(d);
        f.gram_ = Rational(1);
        f.identity_ = true;
        return f;
    }
    f.identity_ = false;
    f.origin_ = points[0];
    f.basis_ = directions.empty() ? QMatrix(d, 0) : QMatrix::from_columns(directions);
    if (directions.empty()) {
        f.left_inverse_ = QMatrix(0, d);
        f.gram_ = Rational(1);
        return f;
    }
    QMatrix bt = f.basis_.transposed();
    QMatrix gram = bt * f.basis_;
    f.gram_ = det(gram);
    f.left_inverse_ = inverse(gram) * bt;
    return f;
}

bool AffineFrame::contains(const QVector& x) const {
    if (x.dim() != ambient_dim()) return false;
    if (identity_) return true;
    return to_ambient(left_inverse_ * (x - origin_)) == x;
}

QVector AffineFrame::to_local(const QVector& x) const {
    if (x.dim() != ambient_dim()) throw DimensionError("to_local: dimension mismatch");
    if (identity_) return x;
    QVector local = left_inverse_ * (x - origin_);
    if (to_ambient(local) != x) throw DimensionError("point is not in the affine hull");
    return local;
}

QVector AffineFrame::to_ambient(const QVector& local) const {
    if (identity_) return local;
    return origin_ + basis_ * local;
}

QVector AffineFrame::normal_to_ambient(const QVector& local_normal) const {
    if (identity_) return local_normal;
    // a = L x + const, so  n.a = (L^T n).x + const.
    return left_inverse_.transposed() * local_normal;
}

}  // namespace spinaltri
