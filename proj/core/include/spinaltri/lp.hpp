#pragma once

#include <vector>

#include "spinaltri/rational.hpp"

namespace spinaltri {

enum class Relation { LessEqual, Less, Equal };

/// a . x  (relation)  rhs, with x a free rational vector.
struct LinearConstraint {
    QVector a;
    Rational rhs;
    Relation relation = Relation::LessEqual;
};

/// True iff some rational x satisfies every constraint. Exact two-phase
/// simplex with Bland's rule; strict inequalities get a shared gap variable
/// that is maximised and must end up positive.
bool lp_feasible(const std::vector<LinearConstraint>& constraints);

/// Standard-form variant used by the geometric predicates:
/// exists y >= 0 with A y = b and y_i > 0 for every i with strict[i].
bool feasible_nonnegative(const QMatrix& a, const QVector& b, const std::vector<bool>& strict);

}  // namespace spinaltri
