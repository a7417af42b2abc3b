#include "rescurv/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "rescurv/matrix.hpp"

namespace rescurv {

namespace {

std::string mask_list(uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

int components_of_edge_subset(const Graph& g, uint64_t edge_mask) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_mask >> e & 1) {
            int a = find(g.edge(e).first), b = find(g.edge(e).second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    return comps;
}

uint64_t induced_edge_mask(const Graph& g, uint64_t vertex_mask) {
    uint64_t m = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if ((vertex_mask >> u & 1) && (vertex_mask >> v & 1)) m |= 1ULL << e;
    }
    return m;
}

bool induced_subgraph_connected(const Graph& g, uint64_t vertex_mask) {
    int start = -1;
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (vertex_mask >> v & 1) {
            if (start < 0) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<int> stack{start};
    uint64_t seen = 1ULL << start;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if ((vertex_mask >> w & 1) && !(seen >> w & 1)) {
                seen |= 1ULL << w;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == count;
}

// A is a union of whole biconnected blocks (the implicit-equality sets of
// the tree polytope).
bool is_block_union(uint64_t edge_mask, const BlockDecomposition& blocks) {
    for (const auto& blk : blocks.block_edges) {
        bool any = false, all = true;
        for (int e : blk) {
            if (edge_mask >> e & 1)
                any = true;
            else
                all = false;
        }
        if (any && !all) return false;
    }
    return true;
}

Rat masked_sum(const std::vector<Rat>& x, uint64_t mask) {
    Rat s(0);
    for (int e = 0; mask; ++e, mask >>= 1)
        if (mask & 1) s += x[e];
    return s;
}

long masked_int_sum(const std::vector<int>& x, uint64_t mask) {
    long s = 0;
    for (int e = 0; mask; ++e, mask >>= 1)
        if (mask & 1) s += x[e];
    return s;
}

} // namespace

std::string Constraint::describe() const {
    switch (kind) {
        case Kind::tree_subset:
            return "tree-polytope bound for edge set A=" + mask_list(aux) +
                   (equality_implied ? " (equality)" : "");
        case Kind::vertex_subset:
            return "tree-polytope bound for induced subgraph on U=" + mask_list(aux) +
                   (equality_implied ? " (equality)" : "");
        case Kind::degree:
            return "degree bound at vertex " + std::to_string(aux);
        case Kind::odd_set:
            return "odd-set bound for U=" + mask_list(aux);
        case Kind::nonneg:
            return "nonnegativity of edge " + std::to_string(aux);
    }
    return "?";
}

HyperplaneSystem tree_polytope_constraints(const Graph& g, const Caps& caps) {
    if (g.edge_count() > caps.max_eager_constraint_edges)
        throw ResourceError("eager constraint cap (2^" +
                            std::to_string(caps.max_eager_constraint_edges) +
                            " edge subsets) exceeded; use the membership oracle");
    if (!g.connected()) throw ParameterError("tree polytope requires a connected graph");
    auto blocks = biconnected_components(g);
    HyperplaneSystem sys;
    sys.num_edges = g.edge_count();
    for (int e = 0; e < g.edge_count(); ++e)
        sys.rows.push_back(Constraint{Constraint::Kind::nonneg, static_cast<uint64_t>(e),
                                      1ULL << e, Rat(0), false});
    uint64_t all = g.edge_count() == 0 ? 0 : (1ULL << g.edge_count()) - 1;
    for (uint64_t a = 1; a <= all && all; ++a) {
        int rank = g.vertex_count() - components_of_edge_subset(g, a);
        sys.rows.push_back(Constraint{Constraint::Kind::tree_subset, a, a, Rat(rank),
                                      is_block_union(a, blocks)});
        if (a == all) break;
    }
    return sys;
}

HyperplaneSystem doubled_matching_constraints(const Graph& g, const Caps& caps) {
    (void)caps;
    if (g.vertex_count() > 21)
        throw ResourceError("odd-set generation cap (2^21 vertex subsets) exceeded");
    HyperplaneSystem sys;
    sys.num_edges = g.edge_count();
    for (int e = 0; e < g.edge_count(); ++e)
        sys.rows.push_back(Constraint{Constraint::Kind::nonneg, static_cast<uint64_t>(e),
                                      1ULL << e, Rat(0), false});
    for (int v = 0; v < g.vertex_count(); ++v) {
        uint64_t star = 0;
        for (int e : g.incident_edges(v)) star |= 1ULL << e;
        sys.rows.push_back(
            Constraint{Constraint::Kind::degree, static_cast<uint64_t>(v), star, Rat(2), false});
    }
    const int n = g.vertex_count();
    for (uint64_t u = 1; n < 64 && u < (1ULL << n); ++u) {
        int size = __builtin_popcountll(u);
        if (size % 2 == 0 || size < 3) continue;
        uint64_t em = induced_edge_mask(g, u);
        if (em == 0) continue;
        sys.rows.push_back(Constraint{Constraint::Kind::odd_set, u, em, Rat(size - 1), false});
    }
    return sys;
}

PolytopeOracle::PolytopeOracle(const Graph& g) : g_(g) {
    if (!g.connected()) throw ParameterError("polytope oracle requires a connected graph");
    if (g.edge_count() > 64 || g.vertex_count() > 30)
        throw ResourceError("polytope oracle supports at most 30 vertices / 64 edges");
    auto blocks = biconnected_components(g_);
    const int n = g_.vertex_count();
    for (uint64_t u = 1; u < (1ULL << n); ++u) {
        if (__builtin_popcountll(u) < 2) continue;
        if (!induced_subgraph_connected(g_, u)) continue;
        uint64_t em = induced_edge_mask(g_, u);
        tree_rows_.push_back(Constraint{Constraint::Kind::vertex_subset, u, em,
                                        Rat(__builtin_popcountll(u) - 1),
                                        is_block_union(em, blocks)});
    }
    for (int v = 0; v < n; ++v) {
        uint64_t star = 0;
        for (int e : g_.incident_edges(v)) star |= 1ULL << e;
        degree_rows_.push_back(
            Constraint{Constraint::Kind::degree, static_cast<uint64_t>(v), star, Rat(2), false});
    }
    for (uint64_t u = 1; u < (1ULL << n); ++u) {
        int size = __builtin_popcountll(u);
        if (size % 2 == 0 || size < 3) continue;
        uint64_t em = induced_edge_mask(g_, u);
        if (em == 0) continue;
        odd_rows_.push_back(Constraint{Constraint::Kind::odd_set, u, em, Rat(size - 1), false});
    }
}

MembershipReport PolytopeOracle::membership(const std::vector<Rat>& x, Region which) const {
    if (static_cast<int>(x.size()) != g_.edge_count())
        throw ParameterError("membership vector length does not match edge count");
    MembershipReport rep;

    auto check_tree_side = [&](bool interior) -> bool {
        for (int e = 0; e < g_.edge_count(); ++e) {
            bool ok = interior ? x[e] > 0 : x[e] >= 0;
            if (!ok) {
                rep.violated = Constraint{Constraint::Kind::nonneg, static_cast<uint64_t>(e),
                                          1ULL << e, Rat(0), false}
                                   .describe();
                return false;
            }
        }
        for (const auto& row : tree_rows_) {
            Rat s = masked_sum(x, row.edge_mask);
            bool ok = row.equality_implied ? s == row.bound : (interior ? s < row.bound : s <= row.bound);
            if (!ok) {
                rep.violated = row.describe();
                return false;
            }
        }
        return true;
    };
    auto check_matching_side = [&]() -> bool {
        for (int e = 0; e < g_.edge_count(); ++e)
            if (x[e] < 0) {
                rep.violated = "nonnegativity of edge " + std::to_string(e);
                return false;
            }
        for (const auto& row : degree_rows_)
            if (masked_sum(x, row.edge_mask) > row.bound) {
                rep.violated = row.describe();
                return false;
            }
        for (const auto& row : odd_rows_)
            if (masked_sum(x, row.edge_mask) > row.bound) {
                rep.violated = row.describe();
                return false;
            }
        return true;
    };

    switch (which) {
        case Region::P: rep.inside = check_tree_side(false); break;
        case Region::P_interior: rep.inside = check_tree_side(true); break;
        case Region::TwoM: rep.inside = check_matching_side(); break;
        case Region::Theta: rep.inside = check_tree_side(false) && check_matching_side(); break;
    }
    return rep;
}

bool PolytopeOracle::integer_point_in_scaled_theta(const std::vector<int>& x, int k) const {
    for (int v : x)
        if (v < 0) return false;
    for (const auto& row : tree_rows_) {
        long s = masked_int_sum(x, row.edge_mask);
        long bound = k * static_cast<long>(row.bound.get_num().get_si());
        if (row.equality_implied ? s != bound : s > bound) return false;
    }
    for (const auto& row : degree_rows_)
        if (masked_int_sum(x, row.edge_mask) > 2L * k) return false;
    for (const auto& row : odd_rows_)
        if (masked_int_sum(x, row.edge_mask) > k * static_cast<long>(row.bound.get_num().get_si()))
            return false;
    return true;
}

InteriorPointResult PolytopeOracle::find_theta_interior_point(const Caps& caps) const {
    const int m = g_.edge_count();
    LinearProgram lp;
    for (int e = 0; e < m; ++e) lp.add_var(Rat(0), false);
    int t = lp.add_var(Rat(1), true);

    for (const auto& row : tree_rows_) {
        if (!row.equality_implied) continue;
        std::vector<std::pair<int, Rat>> terms;
        for (int e : mask_to_indices(row.edge_mask)) terms.emplace_back(e, Rat(1));
        lp.add_row(std::move(terms), Rel::eq, row.bound);
    }
    for (const auto& row : degree_rows_) {
        std::vector<std::pair<int, Rat>> terms;
        for (int e : mask_to_indices(row.edge_mask)) terms.emplace_back(e, Rat(1));
        lp.add_row(std::move(terms), Rel::le, row.bound);
    }
    for (int e = 0; e < m; ++e)
        lp.add_row({{e, Rat(1)}, {t, Rat(-1)}}, Rel::ge, Rat(0));

    // Lazily separated pools.
    std::vector<char> tree_added(tree_rows_.size(), 0), odd_added(odd_rows_.size(), 0);
    while (true) {
        LpResult sol = solve_lp(lp, caps.max_lp_pivots);
        if (sol.status == LpStatus::infeasible) return {};
        if (sol.status == LpStatus::unbounded)
            throw InternalError("interior-point LP cannot be unbounded under Foster equality");
        if (sol.objective_value <= 0) return {};  // more cuts only lower the optimum

        std::vector<Rat> x(sol.x.begin(), sol.x.begin() + m);
        Rat t_val = sol.x[t];
        bool violated = false;
        for (size_t i = 0; i < tree_rows_.size(); ++i) {
            const auto& row = tree_rows_[i];
            if (tree_added[i] || row.equality_implied) continue;
            if (masked_sum(x, row.edge_mask) + t_val > row.bound) {
                std::vector<std::pair<int, Rat>> terms;
                for (int e : mask_to_indices(row.edge_mask)) terms.emplace_back(e, Rat(1));
                terms.emplace_back(t, Rat(1));
                lp.add_row(std::move(terms), Rel::le, row.bound);
                tree_added[i] = 1;
                violated = true;
            }
        }
        for (size_t i = 0; i < odd_rows_.size(); ++i) {
            if (odd_added[i]) continue;
            const auto& row = odd_rows_[i];
            if (masked_sum(x, row.edge_mask) > row.bound) {
                std::vector<std::pair<int, Rat>> terms;
                for (int e : mask_to_indices(row.edge_mask)) terms.emplace_back(e, Rat(1));
                lp.add_row(std::move(terms), Rel::le, row.bound);
                odd_added[i] = 1;
                violated = true;
            }
        }
        if (!violated) {
            InteriorPointResult res;
            res.found = true;
            res.t_star = sol.objective_value;
            res.x = std::move(x);
            return res;
        }
    }
}

MembershipReport membership(const Graph& g, const std::vector<Rat>& x, Region which) {
    return PolytopeOracle(g).membership(x, which);
}

bool non_separable(const Graph& g, const SpanningTreeSet& trees, const std::vector<long>& family,
                   Rat* slack_out, const Caps& caps) {
    if (family.empty()) throw ParameterError("non-separability needs a nonempty tree family");
    PolytopeOracle oracle(g);
    const int m = g.edge_count();

    LinearProgram lp;
    std::vector<int> lambda;
    for (size_t i = 0; i < family.size(); ++i) lambda.push_back(lp.add_var(Rat(0), false));
    int t = lp.add_var(Rat(1), true);

    std::vector<std::pair<int, Rat>> simplex_row;
    for (int v : lambda) simplex_row.emplace_back(v, Rat(1));
    lp.add_row(std::move(simplex_row), Rel::eq, Rat(1));

    auto coeff_for = [&](uint64_t mask) {
        std::vector<std::pair<int, Rat>> terms;
        for (size_t i = 0; i < family.size(); ++i) {
            long tree = family[i];
            if (tree < 0 || tree >= trees.size())
                throw ParameterError("tree family index out of range");
            int overlap = __builtin_popcountll(trees.masks[tree] & mask);
            if (overlap) terms.emplace_back(lambda[i], Rat(overlap));
        }
        return terms;
    };

    for (const auto& row : oracle.tree_rows()) {
        if (row.equality_implied) continue;  // constant over conv(e_T)
        auto terms = coeff_for(row.edge_mask);
        terms.emplace_back(t, Rat(1));
        lp.add_row(std::move(terms), Rel::le, row.bound);
    }
    for (int e = 0; e < m; ++e) {
        auto terms = coeff_for(1ULL << e);
        terms.emplace_back(t, Rat(-1));
        lp.add_row(std::move(terms), Rel::ge, Rat(0));
    }

    LpResult sol = solve_lp(lp, caps.max_lp_pivots);
    if (sol.status != LpStatus::optimal)
        throw InternalError("non-separability LP must be feasible and bounded");
    if (slack_out) *slack_out = sol.objective_value;
    return sol.objective_value > 0;
}

namespace {

struct IntegerPointSearch {
    const Graph& g;
    const PolytopeOracle& oracle;
    int k;
    long target_sum;
    long cap;
    long visited = 0;
    std::vector<int> x;
    std::vector<int> degree;
    std::vector<int> dsu;  // cycle pruning, k == 1 only
    std::vector<std::vector<int>>& out;

    int find(int v) {
        while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
        return v;
    }

    void recurse(int e, long sum) {
        if (++visited > cap)
            throw ResourceError("integer point candidate cap (" + std::to_string(cap) + ") exceeded");
        if (sum > target_sum) return;
        long remaining = static_cast<long>(g.edge_count() - e) * k;
        if (sum + remaining < target_sum) return;
        if (e == g.edge_count()) {
            if (sum == target_sum && oracle.integer_point_in_scaled_theta(x, k)) out.push_back(x);
            return;
        }
        auto [u, v] = g.edge(e);
        for (int val = 0; val <= k; ++val) {
            x[e] = val;
            if (val > 0 && (degree[u] + val > 2 * k || degree[v] + val > 2 * k)) break;
            degree[u] += val;
            degree[v] += val;
            bool ok = true;
            std::vector<int> saved_dsu;
            if (k == 1 && val == 1) {
                saved_dsu = dsu;
                int a = find(u), b = find(v);
                if (a == b)
                    ok = false;  // cycle: candidate cannot lie in P(G)
                else
                    dsu[a] = b;
            }
            if (ok) recurse(e + 1, sum + val);
            if (k == 1 && val == 1) dsu = std::move(saved_dsu);
            degree[u] -= val;
            degree[v] -= val;
        }
        x[e] = 0;
    }
};

} // namespace

IntegerPointsResult theta_integer_points(const Graph& g, int k, const Caps& caps) {
    if (k < 1) throw ParameterError("dilation factor k must be >= 1");
    if (!g.connected()) throw ParameterError("theta integer points require a connected graph");
    PolytopeOracle oracle(g);
    IntegerPointsResult res;
    res.k = k;
    IntegerPointSearch search{g,
                              oracle,
                              k,
                              static_cast<long>(k) * (g.vertex_count() - 1),
                              caps.max_integer_point_candidates,
                              0,
                              std::vector<int>(g.edge_count(), 0),
                              std::vector<int>(g.vertex_count(), 0),
                              std::vector<int>(g.vertex_count()),
                              res.points};
    std::iota(search.dsu.begin(), search.dsu.end(), 0);
    search.recurse(0, 0);
    std::sort(res.points.begin(), res.points.end());
    return res;
}

bool theta_equals_P(const Graph& g, const Caps& caps) {
    auto blocks = biconnected_components(g);
    if (g.vertex_count() >= 2 && blocks.block_edges.size() != 1)
        throw ParameterError("theta_equals_P requires a biconnected graph");
    auto trees = enumerate_spanning_trees(g, caps);
    for (uint64_t mask : trees.masks) {
        auto deg = tree_degrees(g, mask);
        // A spanning tree indicator violates 2M(G) exactly when some vertex
        // has tree-degree > 2 (odd-set bounds hold for every forest).
        for (int d : deg)
            if (d > 2) return false;
    }
    return true;
}

HamPathBoundReport independent_hamiltonian_path_bound(const Graph& g) {
    auto paths = hamiltonian_paths(g);
    auto blocks = biconnected_components(g);
    HamPathBoundReport rep;
    rep.path_count = static_cast<long>(paths.size());
    rep.required = g.edge_count() - static_cast<int>(blocks.block_edges.size());
    if (paths.empty()) {
        rep.independent_count = 0;
        rep.rn_implied = false;
        return rep;
    }
    const int m = g.edge_count();
    Mat<Rat> diff(static_cast<int>(paths.size()) - 1, m);
    for (size_t i = 1; i < paths.size(); ++i)
        for (int e = 0; e < m; ++e) {
            int a = (paths[i] >> e) & 1, b = (paths[0] >> e) & 1;
            diff(static_cast<int>(i) - 1, e) = Rat(a - b);
        }
    int affine_dim = paths.size() > 1 ? rank(diff) : 0;
    rep.independent_count = affine_dim + 1;
    rep.rn_implied = affine_dim >= rep.required;
    return rep;
}

} // namespace rescurv
