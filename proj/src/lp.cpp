#include "rescurv/lp.hpp"

#include <algorithm>

#include "rescurv/errors.hpp"

namespace rescurv {

namespace {

// Computational form: maximize c.z subject to A z = b, z >= 0, b >= 0.
//
// Columns are scaled to integer entries (a positive per-column factor is a
// plain variable substitution) and the phase-2 objective is scaled to
// integers by one global factor, so pricing runs entirely in integer
// arithmetic: with the dual vector y put over a common denominator D, the
// reduced-cost sign of column j is sign(c_j D - sum_i y_num_i a_ij).
//
// Pivot choice is Dantzig's rule (largest reduced cost, valid under the
// shared denominator) with a fallback to Bland's smallest-index rule during
// degenerate stalls; strict objective progress resets the fallback, which
// keeps the method finite.
struct Tableau {
    int m = 0;
    std::vector<std::vector<std::pair<int, mpz_class>>> cols;  // integer-scaled
    std::vector<mpz_class> col_scale;                          // column j holds scale * a_j
    std::vector<mpz_class> cost_int;                           // scaled phase-2 costs
    std::vector<char> artificial;
    std::vector<Rat> b;

    std::vector<std::vector<Rat>> binv;
    std::vector<Rat> xb;
    std::vector<int> basis;
    std::vector<char> in_basis;

    int add_col(bool art) {
        cols.emplace_back();
        col_scale.emplace_back(1);
        cost_int.emplace_back(0);
        artificial.push_back(art);
        in_basis.push_back(0);
        return static_cast<int>(cols.size()) - 1;
    }

    std::vector<Rat> btran(const std::vector<Rat>& cb) const {
        std::vector<Rat> y(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            if (cb[i] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (binv[i][j] != 0) y[j] += cb[i] * binv[i][j];
        }
        return y;
    }

    std::vector<Rat> ftran(int col) const {
        std::vector<Rat> d(m, Rat(0));
        for (const auto& [row, val] : cols[col]) {
            Rat v(val);
            for (int i = 0; i < m; ++i)
                if (binv[i][row] != 0) d[i] += binv[i][row] * v;
        }
        return d;
    }

    void pivot(int leave_row, int enter_col, const std::vector<Rat>& d) {
        Rat piv = d[leave_row];
        for (int j = 0; j < m; ++j) binv[leave_row][j] /= piv;
        xb[leave_row] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave_row || d[i] == 0) continue;
            Rat f = d[i];
            for (int j = 0; j < m; ++j)
                if (binv[leave_row][j] != 0) binv[i][j] -= f * binv[leave_row][j];
            xb[i] -= f * xb[leave_row];
        }
        in_basis[basis[leave_row]] = 0;
        in_basis[enter_col] = 1;
        basis[leave_row] = enter_col;
    }

    // One simplex phase over integer costs `phase_cost` (already on the
    // column scale). Returns true at optimality, false when unbounded.
    bool run(const std::vector<mpz_class>& phase_cost, bool allow_artificial_entering,
             long max_pivots, long& pivots) {
        constexpr int kStallLimit = 12;  // degenerate pivots before Bland kicks in
        int stall = 0;
        while (true) {
            std::vector<Rat> cb(m);
            for (int i = 0; i < m; ++i) cb[i] = Rat(phase_cost[basis[i]]);
            std::vector<Rat> y = btran(cb);

            mpz_class denom(1);
            for (int i = 0; i < m; ++i) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), y[i].get_den().get_mpz_t());
            std::vector<mpz_class> ynum(m);
            for (int i = 0; i < m; ++i) ynum[i] = y[i].get_num() * (denom / y[i].get_den());

            const bool bland = stall >= kStallLimit;
            int enter = -1;
            mpz_class best_rc(0), rc, s;
            for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
                if (in_basis[j]) continue;
                if (!allow_artificial_entering && artificial[j]) continue;
                s = 0;
                for (const auto& [row, val] : cols[j])
                    if (ynum[row] != 0) s += ynum[row] * val;
                rc = phase_cost[j] * denom - s;
                if (rc > 0) {
                    if (bland) {
                        enter = j;
                        break;
                    }
                    if (enter < 0 || rc > best_rc) {
                        enter = j;
                        best_rc = rc;
                    }
                }
            }
            if (enter < 0) return true;

            std::vector<Rat> d = ftran(enter);
            int leave = -1;
            for (int i = 0; i < m; ++i) {
                if (!(d[i] > 0)) continue;
                if (leave < 0) {
                    leave = i;
                    continue;
                }
                Rat lhs = xb[i] * d[leave];
                Rat rhs = xb[leave] * d[i];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
            }
            if (leave < 0) return false;

            bool degenerate = xb[leave] == 0;
            stall = degenerate ? stall + 1 : 0;
            pivot(leave, enter, d);
            if (++pivots > max_pivots)
                throw ResourceError("LP pivot cap (" + std::to_string(max_pivots) + ") exceeded");
        }
    }
};

mpz_class lcm_of_denominators(const std::vector<std::pair<int, Rat>>& terms) {
    mpz_class l(1);
    for (const auto& [row, val] : terms)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), val.get_den().get_mpz_t());
    return l;
}

} // namespace

LpResult solve_lp(const LinearProgram& lp, long max_pivots) {
    const int m = static_cast<int>(lp.rows.size());
    Tableau t;
    t.m = m;

    std::vector<int> pos_col(lp.num_vars), neg_col(lp.num_vars, -1);
    std::vector<int> row_sign(m, 1);
    for (int i = 0; i < m; ++i)
        if (lp.rows[i].rhs < 0) row_sign[i] = -1;

    for (int j = 0; j < lp.num_vars; ++j) {
        pos_col[j] = t.add_col(false);
        if (lp.free_var[j]) neg_col[j] = t.add_col(false);
    }
    std::vector<std::vector<std::pair<int, Rat>>> raw_cols(t.cols.size());
    for (int i = 0; i < m; ++i)
        for (const auto& [var, coeff] : lp.rows[i].terms) {
            if (var < 0 || var >= lp.num_vars) throw ParameterError("LP row references unknown variable");
            if (coeff == 0) continue;
            Rat c = coeff * row_sign[i];
            raw_cols[pos_col[var]].emplace_back(i, c);
            if (neg_col[var] >= 0) raw_cols[neg_col[var]].emplace_back(i, -c);
        }

    t.b.resize(m);
    t.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        t.b[i] = lp.rows[i].rhs * row_sign[i];
        Rel rel = lp.rows[i].rel;
        if (row_sign[i] < 0) rel = rel == Rel::le ? Rel::ge : (rel == Rel::ge ? Rel::le : Rel::eq);
        if (rel == Rel::le || rel == Rel::ge) {
            int sc = t.add_col(false);
            raw_cols.emplace_back();
            raw_cols[sc].emplace_back(i, rel == Rel::le ? Rat(1) : Rat(-1));
            if (rel == Rel::le) t.basis[i] = sc;
        }
    }
    bool need_phase1 = false;
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= 0) continue;
        int art = t.add_col(true);
        raw_cols.emplace_back();
        raw_cols[art].emplace_back(i, Rat(1));
        t.basis[i] = art;
        need_phase1 = true;
    }

    // Integer-scale every column (variable substitution z_j -> z_j / scale).
    for (size_t j = 0; j < raw_cols.size(); ++j) {
        mpz_class scale = lcm_of_denominators(raw_cols[j]);
        t.col_scale[j] = scale;
        for (const auto& [row, val] : raw_cols[j]) {
            Rat scaled = val * Rat(scale);
            t.cols[j].emplace_back(row, scaled.get_num());
        }
    }

    // One global factor makes the phase-2 objective integral on the scaled
    // columns; the reported optimum is unaffected (costs track variables).
    mpz_class obj_scale(1);
    {
        std::vector<std::pair<int, Rat>> scaled_costs;
        for (int j = 0; j < lp.num_vars; ++j) {
            if (lp.objective[j] == 0) continue;
            scaled_costs.emplace_back(0, lp.objective[j] * Rat(t.col_scale[pos_col[j]]));
            if (neg_col[j] >= 0)
                scaled_costs.emplace_back(0, lp.objective[j] * Rat(t.col_scale[neg_col[j]]));
        }
        obj_scale = lcm_of_denominators(scaled_costs);
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        if (lp.objective[j] == 0) continue;
        Rat cpos = lp.objective[j] * Rat(t.col_scale[pos_col[j]]) * Rat(obj_scale);
        t.cost_int[pos_col[j]] = cpos.get_num();
        if (neg_col[j] >= 0) {
            Rat cneg = -lp.objective[j] * Rat(t.col_scale[neg_col[j]]) * Rat(obj_scale);
            t.cost_int[neg_col[j]] = cneg.get_num();
        }
    }

    t.binv.assign(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i) t.binv[i][i] = Rat(1);
    t.xb = t.b;
    for (int i = 0; i < m; ++i) t.in_basis[t.basis[i]] = 1;

    LpResult res;
    res.pivots = 0;

    if (need_phase1) {
        std::vector<mpz_class> c1(t.cols.size(), mpz_class(0));
        for (size_t j = 0; j < t.cols.size(); ++j)
            if (t.artificial[j]) c1[j] = -1;
        if (!t.run(c1, true, max_pivots, res.pivots))
            throw InternalError("phase-1 objective cannot be unbounded");
        Rat art_sum(0);
        for (int i = 0; i < m; ++i)
            if (t.artificial[t.basis[i]]) art_sum += t.xb[i];
        if (art_sum > 0) {
            res.status = LpStatus::infeasible;
            return res;
        }
        // Pivot zero-valued artificials out where a structural entry exists;
        // rows without one are redundant and keep the artificial pinned at 0.
        for (int i = 0; i < m; ++i) {
            if (!t.artificial[t.basis[i]]) continue;
            for (int j = 0; j < static_cast<int>(t.cols.size()); ++j) {
                if (t.in_basis[j] || t.artificial[j]) continue;
                Rat dval(0);
                for (const auto& [row, val] : t.cols[j])
                    if (t.binv[i][row] != 0) dval += t.binv[i][row] * Rat(val);
                if (dval != 0) {
                    std::vector<Rat> dir = t.ftran(j);
                    t.pivot(i, j, dir);
                    ++res.pivots;
                    break;
                }
            }
        }
    }

    if (!t.run(t.cost_int, false, max_pivots, res.pivots)) {
        res.status = LpStatus::unbounded;
        return res;
    }

    res.status = LpStatus::optimal;
    res.x.assign(lp.num_vars, Rat(0));
    std::vector<Rat> col_val(t.cols.size(), Rat(0));
    for (int i = 0; i < m; ++i) col_val[t.basis[i]] = t.xb[i];
    res.objective_value = 0;
    for (int j = 0; j < lp.num_vars; ++j) {
        res.x[j] = col_val[pos_col[j]] * Rat(t.col_scale[pos_col[j]]);
        if (neg_col[j] >= 0) res.x[j] -= col_val[neg_col[j]] * Rat(t.col_scale[neg_col[j]]);
        res.objective_value += lp.objective[j] * res.x[j];
    }

    std::vector<Rat> cb(m);
    for (int i = 0; i < m; ++i) cb[i] = Rat(t.cost_int[t.basis[i]]);
    std::vector<Rat> y = t.btran(cb);
    res.dual.resize(m);
    for (int i = 0; i < m; ++i) res.dual[i] = y[i] * Rat(row_sign[i]) / Rat(obj_scale);
    return res;
}

bool verify_dual_bound(const LinearProgram& lp, const std::vector<Rat>& y, Rat* bound_out) {
    if (y.size() != lp.rows.size()) return false;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        if (lp.rows[i].rel == Rel::le && y[i] < 0) return false;
        if (lp.rows[i].rel == Rel::ge && y[i] > 0) return false;
    }
    // Column condition: sum_i y_i a_ij >= c_j, with equality on free vars.
    std::vector<Rat> acc(lp.num_vars, Rat(0));
    for (size_t i = 0; i < lp.rows.size(); ++i)
        for (const auto& [var, coeff] : lp.rows[i].terms) acc[var] += y[i] * coeff;
    for (int j = 0; j < lp.num_vars; ++j) {
        if (lp.free_var[j] && acc[j] != lp.objective[j]) return false;
        if (!lp.free_var[j] && acc[j] < lp.objective[j]) return false;
    }
    if (bound_out) {
        Rat b(0);
        for (size_t i = 0; i < lp.rows.size(); ++i) b += y[i] * lp.rows[i].rhs;
        *bound_out = b;
    }
    return true;
}

} // namespace rescurv
