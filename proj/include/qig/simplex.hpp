#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qig::lp {

using Rational = boost::multiprecision::cpp_rational;

enum class Relation { less_equal, greater_equal, equal };

struct Constraint {
    std::vector<Rational> coeffs;  // one per variable
    Relation relation = Relation::less_equal;
    Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational objective;
};

/// Minimizes objective . x subject to the constraints and x >= 0, in exact
/// rational arithmetic. Two-phase dictionary simplex with Bland's rule, so
/// it terminates on every input. Intended for small instances (a few
/// hundred variables and rows).
LpResult solve(const std::vector<Rational>& objective, const std::vector<Constraint>& constraints);

}  // namespace qig::lp
