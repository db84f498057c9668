#include "spinaltri/lp.hpp"

#include <cstddef>
#include <optional>

#include "spinaltri/errors.hpp"

namespace spinaltri {

namespace {

// Dense tableau over the rationals. Column `width` holds the right-hand side.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t width) : width_(width), rows_(rows, std::vector<Rational>(width + 1)) {}

    Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    Rational& rhs(std::size_t r) { return rows_[r][width_]; }
    const Rational& rhs(std::size_t r) const { return rows_[r][width_]; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = Rational(1) / at(r, c);
        for (auto& x : rows_[r])
            if (!x.is_zero()) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Rational f = at(i, c);
            for (std::size_t j = 0; j <= width_; ++j)
                if (!rows_[r][j].is_zero()) rows_[i][j] -= f * rows_[r][j];
        }
        basis[r] = c;
    }

    void drop_row(std::size_t r) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    }

    Rational objective_value(const std::vector<Rational>& cost) const {
        Rational v(0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!cost[basis[i]].is_zero()) v += cost[basis[i]] * rhs(i);
        return v;
    }

    enum class Outcome { Optimal, Unbounded, Stopped };

    // Maximises cost . y over columns with allowed[j]; Bland's rule for both
    // entering and leaving choices, so cycling cannot occur. `stop` lets the
    // caller end early once the current vertex already answers its question.
    template <typename StopFn>
    Outcome maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed, StopFn stop) {
        std::vector<bool> in_basis(width_, false);
        for (;;) {
            if (stop()) return Outcome::Stopped;
            std::fill(in_basis.begin(), in_basis.end(), false);
            for (auto b : basis) in_basis[b] = true;

            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < width_ && !entering; ++j) {
                if (!allowed[j] || in_basis[j]) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows_.size(); ++i)
                    if (!cost[basis[i]].is_zero() && !at(i, j).is_zero()) reduced -= cost[basis[i]] * at(i, j);
                if (reduced.sign() > 0) entering = j;
            }
            if (!entering) return Outcome::Optimal;

            const std::size_t c = *entering;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (at(i, c).sign() <= 0) continue;
                Rational ratio = rhs(i) / at(i, c);
                if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
                    leaving = i;
                    best = std::move(ratio);
                }
            }
            if (!leaving) return Outcome::Unbounded;
            pivot(*leaving, c);
        }
    }

private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
};

}  // namespace

bool feasible_nonnegative(const QMatrix& a, const QVector& b, const std::vector<bool>& strict) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != m || strict.size() != n) throw DimensionError("feasible_nonnegative: shape mismatch");

    bool any_strict = false;
    for (bool s : strict) any_strict = any_strict || s;

    // Columns: y/z (n) | gap (1) | gap slack (1) | artificials (rows).
    // Strict variables are written y_i = z_i + gap with z_i >= 0.
    const std::size_t gap = n;
    const std::size_t gap_slack = n + 1;
    const std::size_t rows = m + (any_strict ? 1 : 0);
    const std::size_t real_cols = any_strict ? n + 2 : n;
    const std::size_t width = real_cols + rows;

    Tableau t(rows, width);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t.at(i, j) = a(i, j);
            if (any_strict && strict[j]) t.at(i, gap) += a(i, j);
        }
        t.rhs(i) = b[i];
    }
    if (any_strict) {
        // gap + gap_slack = 1 keeps phase II bounded.
        t.at(m, gap) = 1;
        t.at(m, gap_slack) = 1;
        t.rhs(m) = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (t.rhs(i).sign() < 0) {
            for (std::size_t j = 0; j <= width; ++j)
                if (!t.at(i, j).is_zero()) t.at(i, j) = -t.at(i, j);
        }
        t.at(i, real_cols + i) = 1;
    }
    t.basis.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) t.basis[i] = real_cols + i;

    // Phase I: maximise -(sum of artificials).
    std::vector<Rational> phase1(width, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) phase1[real_cols + i] = -1;
    std::vector<bool> all(width, true);
    t.maximize(phase1, all, [] { return false; });
    if (t.objective_value(phase1).sign() < 0) return false;
    if (!any_strict) return true;

    // Drive zero-valued artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t i = 0; i < t.rows();) {
        if (t.basis[i] < real_cols) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < real_cols && !col; ++j)
            if (!t.at(i, j).is_zero()) col = j;
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.drop_row(i);
        }
    }

    std::vector<Rational> phase2(width, Rational(0));
    phase2[gap] = 1;
    std::vector<bool> real(width, false);
    for (std::size_t j = 0; j < real_cols; ++j) real[j] = true;
    auto gap_positive = [&] { return t.objective_value(phase2).sign() > 0; };
    auto outcome = t.maximize(phase2, real, gap_positive);
    if (outcome != Tableau::Outcome::Optimal) return true;
    return gap_positive();
}

bool lp_feasible(const std::vector<LinearConstraint>& constraints) {
    if (constraints.empty()) return true;
    const std::size_t n = constraints[0].a.dim();
    std::size_t slacks = 0;
    for (const auto& c : constraints) {
        if (c.a.dim() != n) throw DimensionError("lp_feasible: constraint vectors of unequal dimension");
        if (c.relation != Relation::Equal) ++slacks;
    }
    // x = x+ - x-, one slack per inequality; strictness moves onto the slack.
    QMatrix a(constraints.size(), 2 * n + slacks);
    QVector b(constraints.size());
    std::vector<bool> strict(2 * n + slacks, false);
    std::size_t s = 2 * n;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = c.a[j];
            a(i, n + j) = -c.a[j];
        }
        b[i] = c.rhs;
        if (c.relation != Relation::Equal) {
            a(i, s) = 1;
            strict[s] = c.relation == Relation::Less;
            ++s;
        }
    }
    return feasible_nonnegative(a, b, strict);
}

}  // namespace spinaltri
