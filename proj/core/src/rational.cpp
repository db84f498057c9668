#include "spinaltri/rational.hpp"

#include <ostream>
#include <sstream>

#include "spinaltri/errors.hpp"

namespace spinaltri {

Rational::Rational(long num, long den) {
    if (den == 0) throw DimensionError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DimensionError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class num = r.numerator(), den = r.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

QVector QVector::unit(std::size_t dim, std::size_t index) {
    QVector v(dim);
    v[index] = 1;
    return v;
}

bool QVector::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

QVector& QVector::operator+=(const QVector& o) {
    if (o.dim() != dim()) throw DimensionError("vector dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

QVector& QVector::operator-=(const QVector& o) {
    if (o.dim() != dim()) throw DimensionError("vector dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

QVector& QVector::operator*=(const Rational& k) {
    for (auto& x : entries_) x *= k;
    return *this;
}

std::string QVector::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("dot product dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i].raw() * b[i].raw();
    return Rational(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows[0].dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != m.cols_) throw DimensionError("rows of unequal length");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
    if (cols.empty()) return {};
    QMatrix m(cols[0].dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].dim() != m.rows_) throw DimensionError("columns of unequal length");
        for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    std::vector<Rational> out(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return QVector(std::move(out));
}

QVector QMatrix::column(std::size_t c) const {
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols_ != v.dim()) throw DimensionError("matrix-vector dimension mismatch");
    QVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero()) acc += a(i, k).raw() * v[k].raw();
        out[i] = Rational(std::move(acc));
    }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum dimension mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference dimension mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

QMatrix operator*(const Rational& k, QMatrix a) {
    for (auto& x : a.data_) x *= k;
    return a;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

}  // namespace spinaltri
