#pragma once

// Independent brute-force oracles for the test suite. These deliberately
// avoid the library's algorithms: trees come from testing all (n-1)-subsets,
// resistances from the weighted tree-ratio definition, and LP optima from
// basic-solution enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/lp.hpp"
#include "rescurv/matrix.hpp"
#include "rescurv/rational.hpp"

namespace oracle {

using rescurv::Graph;
using rescurv::Rat;

inline bool subset_is_spanning_tree(const Graph& g, const std::vector<int>& edges) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int e : edges) {
        int a = find(g.edge(e).first), b = find(g.edge(e).second);
        if (a == b) return false;
        parent[a] = b;
        ++merges;
    }
    return merges == g.vertex_count() - 1;
}

/// All spanning trees as sorted bitmasks, by brute force over combinations.
inline std::vector<uint64_t> brute_spanning_trees(const Graph& g) {
    const int m = g.edge_count();
    const int k = g.vertex_count() - 1;
    std::vector<uint64_t> out;
    if (k == 0) return {0};
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (subset_is_spanning_tree(g, pick)) {
            uint64_t mask = 0;
            for (int e : pick) mask |= 1ULL << e;
            out.push_back(mask);
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Relative resistances straight from the weighted tree-ratio definition.
inline std::vector<Rat> brute_relative_resistances(const Graph& g, const std::vector<Rat>& c) {
    auto trees = brute_spanning_trees(g);
    Rat z(0);
    std::vector<Rat> num(g.edge_count(), Rat(0));
    for (uint64_t mask : trees) {
        Rat prod(1);
        for (int e = 0; e < g.edge_count(); ++e)
            if (mask >> e & 1) prod *= c[e];
        z += prod;
        for (int e = 0; e < g.edge_count(); ++e)
            if (mask >> e & 1) num[e] += prod;
    }
    for (auto& x : num) x /= z;
    return num;
}

/// Effective resistance on an edge from the same definition.
inline Rat brute_edge_resistance(const Graph& g, const std::vector<Rat>& c, int e) {
    return brute_relative_resistances(g, c)[e] / c[e];
}

/// LP oracle: enumerate all basic solutions (every choice of tight
/// constraints among rows and variable bounds), keep feasible ones, return
/// the best objective. Assumes the optimum is attained (bounded, feasible)
/// when it returns a value.
struct BruteLpResult {
    bool feasible = false;
    bool has_optimum = false;
    Rat optimum;
};

inline BruteLpResult brute_lp(const rescurv::LinearProgram& lp) {
    using rescurv::Mat;
    const int n = lp.num_vars;
    std::vector<std::vector<Rat>> rows;  // coefficient rows incl. bound rows
    std::vector<Rat> rhs;
    std::vector<int> kind;  // 0: le, 1: eq, 2: ge  (bound rows: x_j >= 0 -> ge)
    for (const auto& row : lp.rows) {
        std::vector<Rat> r(n, Rat(0));
        for (auto& [v, coeff] : row.terms) r[v] += coeff;
        rows.push_back(r);
        rhs.push_back(row.rhs);
        kind.push_back(row.rel == rescurv::Rel::le ? 0 : (row.rel == rescurv::Rel::eq ? 1 : 2));
    }
    for (int j = 0; j < n; ++j) {
        if (lp.free_var[j]) continue;
        std::vector<Rat> r(n, Rat(0));
        r[j] = 1;
        rows.push_back(r);
        rhs.push_back(Rat(0));
        kind.push_back(2);
    }
    const int total = static_cast<int>(rows.size());

    auto feasible = [&](const std::vector<Rat>& x) {
        for (int i = 0; i < total; ++i) {
            Rat lhs(0);
            for (int j = 0; j < n; ++j) lhs += rows[i][j] * x[j];
            if (kind[i] == 0 && lhs > rhs[i]) return false;
            if (kind[i] == 1 && lhs != rhs[i]) return false;
            if (kind[i] == 2 && lhs < rhs[i]) return false;
        }
        return true;
    };

    BruteLpResult res;
    std::vector<int> pick(n);
    if (n == 0) return res;
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == n) {
            Mat<Rat> a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a(i, j) = rows[pick[i]][j];
            auto inv = rescurv::inverse(a);
            if (!inv) return;
            std::vector<Rat> b(n);
            for (int i = 0; i < n; ++i) b[i] = rhs[pick[i]];
            auto x = inv->mul(b);
            if (!feasible(x)) return;
            Rat obj(0);
            for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
            res.feasible = true;
            if (!res.has_optimum || obj > res.optimum) {
                res.has_optimum = true;
                res.optimum = obj;
            }
            return;
        }
        for (int i = start; i < total; ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return res;
}

} // namespace oracle
