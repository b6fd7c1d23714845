#include "qig/simplex.hpp"

#include <stdexcept>

namespace qig::lp {

namespace {

// Dense tableau: rows are constraints (all turned into equalities with
// slack/artificial columns, rhs >= 0), last row is the objective being
// minimized. basis[i] holds the variable owning row i.
struct Tableau {
    int rows = 0;
    int cols = 0;  // structural + slack + artificial + rhs
    std::vector<std::vector<Rational>> a;
    std::vector<int> basis;

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Rational& at(int r, int c) const {
        return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    void pivot(int pr, int pc) {
        const Rational p = at(pr, pc);
        auto& prow = a[static_cast<std::size_t>(pr)];
        for (auto& v : prow) v /= p;
        for (int r = 0; r <= rows; ++r) {
            if (r == pr) continue;
            const Rational factor = at(r, pc);
            if (factor == 0) continue;
            auto& row = a[static_cast<std::size_t>(r)];
            for (int c = 0; c <= cols; ++c) {
                row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
            }
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost; leaving = min ratio, ties to the lowest basis variable index.
    // Returns false when optimal, throws on unboundedness.
    bool step(int eligible_cols) {
        int pc = -1;
        for (int c = 0; c < eligible_cols; ++c) {
            if (at(rows, c) < 0) {
                pc = c;
                break;
            }
        }
        if (pc == -1) return false;
        int pr = -1;
        Rational best_ratio;
        for (int r = 0; r < rows; ++r) {
            if (at(r, pc) <= 0) continue;
            const Rational ratio = at(r, cols) / at(r, pc);
            if (pr == -1 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(pr)])) {
                pr = r;
                best_ratio = ratio;
            }
        }
        if (pr == -1) throw std::runtime_error("simplex: unbounded");
        pivot(pr, pc);
        return true;
    }
};

}  // namespace

LpResult solve(const std::vector<Rational>& objective, const std::vector<Constraint>& constraints) {
    const int n = static_cast<int>(objective.size());
    const int m = static_cast<int>(constraints.size());
    for (const auto& con : constraints) {
        if (static_cast<int>(con.coeffs.size()) != n) {
            throw std::invalid_argument("simplex: constraint arity mismatch");
        }
    }

    // Normal form: a.x (<=|=) b with b >= 0.
    struct Row {
        std::vector<Rational> a;
        Rational b;
        bool equality = false;
        int slack_sign = 0;  // +1 surplus-free slack, -1 surplus column
    };
    std::vector<Row> rowsv;
    rowsv.reserve(static_cast<std::size_t>(m));
    for (const auto& con : constraints) {
        Row row;
        row.a = con.coeffs;
        row.b = con.rhs;
        switch (con.relation) {
            case Relation::less_equal:
                row.slack_sign = 1;
                break;
            case Relation::greater_equal:
                for (auto& v : row.a) v = -v;
                row.b = -row.b;
                row.slack_sign = 1;
                break;
            case Relation::equal:
                row.equality = true;
                break;
        }
        if (row.b < 0) {
            for (auto& v : row.a) v = -v;
            row.b = -row.b;
            row.slack_sign = -row.slack_sign;
        }
        rowsv.push_back(std::move(row));
    }

    // Column layout: structural | slack | artificial | rhs.
    int slack_count = 0;
    for (const auto& row : rowsv) slack_count += row.slack_sign != 0 ? 1 : 0;
    int artificial_count = 0;
    for (const auto& row : rowsv) {
        // A negative slack cannot seed a feasible basis; equalities never can.
        if (row.equality || row.slack_sign < 0) ++artificial_count;
    }

    Tableau t;
    t.rows = m;
    t.cols = n + slack_count + artificial_count;
    t.a.assign(static_cast<std::size_t>(m) + 1,
               std::vector<Rational>(static_cast<std::size_t>(t.cols) + 1, Rational(0)));
    t.basis.assign(static_cast<std::size_t>(m), -1);

    int next_slack = n;
    int next_artificial = n + slack_count;
    for (int r = 0; r < m; ++r) {
        const Row& row = rowsv[static_cast<std::size_t>(r)];
        for (int c = 0; c < n; ++c) t.at(r, c) = row.a[static_cast<std::size_t>(c)];
        t.at(r, t.cols) = row.b;
        if (row.slack_sign != 0) {
            t.at(r, next_slack) = Rational(row.slack_sign);
            if (row.slack_sign > 0) t.basis[static_cast<std::size_t>(r)] = next_slack;
            ++next_slack;
        }
        if (row.equality || row.slack_sign < 0) {
            t.at(r, next_artificial) = 1;
            t.basis[static_cast<std::size_t>(r)] = next_artificial;
            ++next_artificial;
        }
    }

    const int artificial_begin = n + slack_count;
    if (artificial_count > 0) {
        // Phase 1: minimize the sum of artificials.
        for (int c = 0; c <= t.cols; ++c) {
            Rational sum = 0;
            for (int r = 0; r < m; ++r) {
                if (t.basis[static_cast<std::size_t>(r)] >= artificial_begin) sum += t.at(r, c);
            }
            t.at(m, c) = -sum;
        }
        for (int c = artificial_begin; c < t.cols; ++c) t.at(m, c) = 0;
        while (t.step(t.cols)) {
        }
        if (t.at(m, t.cols) != 0) {
            return LpResult{LpStatus::infeasible, {}, Rational(0)};
        }
        // Drive leftover artificials out of the basis.
        for (int r = 0; r < m; ++r) {
            if (t.basis[static_cast<std::size_t>(r)] < artificial_begin) continue;
            int pc = -1;
            for (int c = 0; c < artificial_begin; ++c) {
                if (t.at(r, c) != 0) {
                    pc = c;
                    break;
                }
            }
            if (pc >= 0) t.pivot(r, pc);
            // An all-zero row is redundant; its artificial stays basic at
            // value zero, which is harmless for phase 2.
        }
    }

    // Phase 2: restore the real objective expressed over the current basis.
    for (int c = 0; c <= t.cols; ++c) t.at(m, c) = 0;
    for (int c = 0; c < n; ++c) t.at(m, c) = objective[static_cast<std::size_t>(c)];
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[static_cast<std::size_t>(r)];
        if (b < n && objective[static_cast<std::size_t>(b)] != 0) {
            const Rational factor = objective[static_cast<std::size_t>(b)];
            for (int c = 0; c <= t.cols; ++c) t.at(m, c) -= factor * t.at(r, c);
        }
    }

    try {
        while (t.step(artificial_begin)) {
        }
    } catch (const std::runtime_error&) {
        return LpResult{LpStatus::unbounded, {}, Rational(0)};
    }

    LpResult result;
    result.status = LpStatus::optimal;
    result.x.assign(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[static_cast<std::size_t>(r)];
        if (b < n) result.x[static_cast<std::size_t>(b)] = t.at(r, t.cols);
    }
    result.objective = 0;
    for (int c = 0; c < n; ++c) {
        result.objective += objective[static_cast<std::size_t>(c)] * result.x[static_cast<std::size_t>(c)];
    }
    return result;
}

}  // namespace qig::lp
