#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "spinaltri/rational.hpp"

// Reference implementations used as oracles. They share nothing with the
// library beyond the Rational/QVector/QMatrix value types.
namespace testing_support {

using spinaltri::QMatrix;
using spinaltri::QVector;
using spinaltri::Rational;

inline QVector vec(std::initializer_list<long> xs) {
    QVector v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = Rational(x);
    return v;
}

inline std::vector<QVector> points(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<QVector> out;
    for (const auto& r : rows) out.push_back(vec(r));
    return out;
}

inline std::vector<std::vector<mpq_class>> raw(const QMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).raw();
    return a;
}

/// Cofactor expansion along the first row.
inline mpq_class laplace_det(const std::vector<std::vector<mpq_class>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpq_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<mpq_class>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<mpq_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(std::move(row));
        }
        const mpq_class term = a[0][c] * laplace_det(minor);
        total += (c % 2 == 0) ? term : mpq_class(-term);
    }
    return total;
}

inline Rational laplace_det(const QMatrix& m) { return Rational(laplace_det(raw(m))); }

/// Plain Gaussian elimination with partial (first non-zero) pivoting.
inline std::size_t gauss_rank(std::vector<std::vector<mpq_class>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

inline std::size_t gauss_rank(const QMatrix& m) { return gauss_rank(raw(m)); }

/// Twice the signed area of a polygon given in cyclic order.
inline Rational shoelace2(const std::vector<QVector>& poly) {
    Rational s;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        s += p[0] * q[1] - p[1] * q[0];
    }
    return s;
}

/// Convex polygon vertices sorted counter-clockwise around their centroid,
/// comparing angles exactly by half-plane and cross product.
inline std::vector<QVector> ccw_order(std::vector<QVector> poly) {
    QVector c(2);
    for (const auto& p : poly) c += p;
    c *= Rational(1) / Rational(static_cast<long>(poly.size()));
    auto half = [&](const QVector& p) {
        const Rational dx = p[0] - c[0], dy = p[1] - c[1];
        return dy > Rational(0) || (dy.is_zero() && dx > Rational(0)) ? 0 : 1;
    };
    std::sort(poly.begin(), poly.end(), [&](const QVector& a, const QVector& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > Rational(0);
    });
    return poly;
}

inline Rational polygon_area(const std::vector<QVector>& convex_vertices) {
    return spinaltri::abs(shoelace2(ccw_order(convex_vertices))) / Rational(2);
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(d(rng));
    return m;
}

inline QVector random_vector(std::mt19937_64& rng, std::size_t dim, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    QVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(d(rng));
    return v;
}

/// Random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng, long span) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
    return std::set<T>(v.begin(), v.end());
}

}  // namespace testing_support
