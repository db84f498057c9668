#pragma once

// Exact rational scalars, vectors and dense matrices.
//
// Rational wraps GMP's mpq_class and keeps it canonical at all times
// (reduced, positive denominator, zero is 0/1). QVector and QMatrix are
// plain value types over Rational; nothing in the core uses floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinaltri {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q == 0.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when q == 1; the sign sits on the numerator.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t dim) : entries_(dim) {}
    QVector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    static QVector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;

    QVector& operator+=(const QVector& o);
    QVector& operator-=(const QVector& o);
    QVector& operator*=(const Rational& k);

    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(QVector a, const Rational& k) { return a *= k; }
    friend QVector operator*(const Rational& k, QVector a) { return a *= k; }
    friend QVector operator-(QVector a) { return a *= Rational(-1); }

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
    /// Lexicographic; used for canonical orderings only.
    friend bool operator<(const QVector& a, const QVector& b) { return a.entries_ < b.entries_; }

    std::string to_string() const;

private:
    std::vector<Rational> entries_;
};

Rational dot(const QVector& a, const QVector& b);
std::ostream& operator<<(std::ostream& os, const QVector& v);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    static QMatrix from_columns(const std::vector<QVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    QVector column(std::size_t c) const;
    QMatrix transposed() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QVector operator*(const QMatrix& a, const QVector& v);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& k, QMatrix a);

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace spinaltri
