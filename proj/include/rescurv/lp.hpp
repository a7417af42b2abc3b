#pragma once

#include <utility>
#include <vector>

#include "rescurv/rational.hpp"

namespace rescurv {

enum class Rel { le, eq, ge };
enum class LpStatus { optimal, infeasible, unbounded };

/// maximize objective . x  subject to the rows; variables are >= 0 unless
/// marked free. All data exact rationals.
struct LinearProgram {
    struct Row {
        std::vector<std::pair<int, Rat>> terms;
        Rel rel = Rel::le;
        Rat rhs;
    };

    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<bool> free_var;
    std::vector<Row> rows;

    int add_var(Rat obj = Rat(0), bool is_free = false) {
        objective.push_back(std::move(obj));
        free_var.push_back(is_free);
        return num_vars++;
    }
    void add_row(std::vector<std::pair<int, Rat>> terms, Rel rel, Rat rhs) {
        rows.push_back(Row{std::move(terms), rel, std::move(rhs)});
    }
};

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rat objective_value;
    std::vector<Rat> x;     // primal solution (valid when optimal)
    std::vector<Rat> dual;  // per-row multipliers: >= 0 for <=, <= 0 for >=, free for =
    long pivots = 0;
};

/// Exact two-phase revised simplex with Bland's smallest-index anti-cycling
/// rule. Throws ResourceError at the pivot cap; infeasible and unbounded are
/// reported as statuses.
LpResult solve_lp(const LinearProgram& lp, long max_pivots = 500000);

/// Weak-duality certificate check: y must satisfy the dual sign and
/// feasibility conditions for lp, in which case every feasible point has
/// objective <= y . rhs. Returns that bound.
bool verify_dual_bound(const LinearProgram& lp, const std::vector<Rat>& y, Rat* bound_out = nullptr);

} // namespace rescurv
