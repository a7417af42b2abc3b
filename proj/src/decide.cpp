#include "rescurv/decide.hpp"

#include <algorithm>
#include <map>

#include "rescurv/polytope.hpp"

namespace rescurv {

std::string to_string(RnClass c) {
    switch (c) {
        case RnClass::RP: return "RP";
        case RnClass::SRN: return "SRN";
        case RnClass::NOT_RN: return "NOT_RN";
    }
    return "?";
}

namespace {

// The LP is solved over one variable per distinct tree degree-vector rather
// than one per tree: trees with equal degree vectors are interchangeable in
// every constraint, and spreading a group's mass uniformly preserves
// feasibility and the objective. With the substitution nu_T = mu_T - t this
// leaves |V|+1 rows and far fewer columns; the full witness distribution is
// recovered afterwards.
struct GroupedProgram {
    std::vector<std::vector<int>> group_degrees;  // degree vector per group
    std::vector<long> group_size;
    std::vector<long> group_of_tree;
};

GroupedProgram group_trees(const Graph& g, const SpanningTreeSet& trees) {
    GroupedProgram gp;
    std::map<std::vector<int>, long> index;
    gp.group_of_tree.reserve(trees.masks.size());
    for (uint64_t mask : trees.masks) {
        auto deg = tree_degrees(g, mask);
        auto [it, inserted] = index.try_emplace(deg, static_cast<long>(gp.group_degrees.size()));
        if (inserted) {
            gp.group_degrees.push_back(deg);
            gp.group_size.push_back(0);
        }
        gp.group_of_tree.push_back(it->second);
        ++gp.group_size[it->second];
    }
    return gp;
}

LpDecision run_decision_lp(const Graph& g, const SpanningTreeSet& trees, bool strict,
                           const Caps& caps) {
    const int n = g.vertex_count();
    const long num_trees = trees.size();
    if (num_trees == 0) throw ParameterError("decision LP needs at least one spanning tree");

    GroupedProgram gp = group_trees(g, trees);
    const long groups = static_cast<long>(gp.group_degrees.size());

    LinearProgram lp;
    std::vector<int> nu(groups);
    for (long s = 0; s < groups; ++s) nu[s] = lp.add_var(Rat(0), false);
    int t = lp.add_var(Rat(1), true);

    // Row 0: sum_T mu_T = sum_S nu_S + N t = 1.
    std::vector<std::pair<int, Rat>> row0;
    for (long s = 0; s < groups; ++s) row0.emplace_back(nu[s], Rat(gp.group_size[s]));
    row0.emplace_back(t, Rat(num_trees));
    lp.add_row(std::move(row0), Rel::eq, Rat(1));

    // One expected-degree row per vertex; in strict mode the bound is 2 - t.
    std::vector<long> degree_total(n, 0);
    for (long s = 0; s < groups; ++s)
        for (int v = 0; v < n; ++v) degree_total[v] += gp.group_size[s] * gp.group_degrees[s][v];
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, Rat>> row;
        for (long s = 0; s < groups; ++s) {
            long d = gp.group_size[s] * gp.group_degrees[s][v];
            if (d) row.emplace_back(nu[s], Rat(d));
        }
        row.emplace_back(t, Rat(degree_total[v] + (strict ? 1 : 0)));
        lp.add_row(std::move(row), Rel::le, Rat(2));
    }

    LpResult sol = solve_lp(lp, caps.max_lp_pivots);
    LpDecision dec;
    dec.status = sol.status;
    if (sol.status == LpStatus::unbounded)
        throw InternalError("decision LP cannot be unbounded (mu_T >= t and sum mu = 1 bound t)");
    if (sol.status == LpStatus::infeasible) return dec;

    dec.t_star = sol.objective_value;
    dec.dual = sol.dual;
    dec.feasible = *dec.t_star > 0;
    if (dec.feasible) {
        dec.mu.kind = TreeDistribution::Kind::positive;
        dec.mu.prob.resize(num_trees);
        // nu[s] is the per-tree excess over t, shared by the whole group
        // (the rows carry the group-size multiplicity).
        for (long tr = 0; tr < num_trees; ++tr)
            dec.mu.prob[tr] = sol.x[nu[gp.group_of_tree[tr]]] + *dec.t_star;
        Rat total(0);
        for (const auto& p : dec.mu.prob) {
            if (p < *dec.t_star) throw InternalError("witness probability below t*");
            total += p;
        }
        if (total != 1) throw InternalError("witness distribution does not sum to 1");
    }
    return dec;
}

} // namespace

LpDecision decide_rn(const Graph& g, const SpanningTreeSet& trees, const Caps& caps) {
    return run_decision_lp(g, trees, false, caps);
}

LpDecision decide_rp(const Graph& g, const SpanningTreeSet& trees, const Caps& caps) {
    return run_decision_lp(g, trees, true, caps);
}

bool verify_not_rp_certificate(const Graph& g, const SpanningTreeSet& trees,
                               const std::vector<Rat>& dual) {
    const int n = g.vertex_count();
    if (dual.size() != static_cast<size_t>(n) + 1) return false;
    const Rat& y0 = dual[0];
    // Vertex multipliers must be nonnegative.
    for (int v = 0; v < n; ++v)
        if (dual[v + 1] < 0) return false;
    // z_T = y0 + sum_v deg_T(v) y_v >= 0 for every tree, sum_v y_v +
    // sum_T z_T = 1, and the certified bound y0 + 2 sum_v y_v must be <= 0:
    // then t <= bound for every feasible (mu, t) of the strict program.
    Rat z_sum(0);
    Rat y_sum(0);
    for (int v = 0; v < n; ++v) y_sum += dual[v + 1];
    for (uint64_t mask : trees.masks) {
        auto deg = tree_degrees(g, mask);
        Rat z = y0;
        for (int v = 0; v < n; ++v) z += Rat(deg[v]) * dual[v + 1];
        if (z < 0) return false;
        z_sum += z;
    }
    if (z_sum + y_sum != 1) return false;
    Rat bound = y0 + Rat(2) * y_sum;
    return bound <= 0;
}

Verdict classify(const Graph& g, const Caps& caps) {
    if (!g.connected()) throw ParameterError("classification requires a connected graph");
    auto trees = enumerate_spanning_trees(g, caps);

    Verdict verdict;
    verdict.tree_count = trees.size();

    LpDecision rp = decide_rp(g, trees, caps);
    if (rp.t_star) verdict.t_star_rp = rp.t_star;
    if (rp.feasible) {
        verdict.cls = RnClass::RP;
        verdict.t_star = rp.t_star;
        verdict.witness = rp.mu;
    } else {
        LpDecision rn = decide_rn(g, trees, caps);
        if (rn.t_star) verdict.t_star_rn = rn.t_star;
        if (rn.feasible) {
            verdict.cls = RnClass::SRN;
            verdict.t_star = rn.t_star;
            verdict.witness = rn.mu;
            if (rp.status == LpStatus::optimal) {
                verdict.not_rp_certificate = rp.dual;
                if (!verify_not_rp_certificate(g, trees, verdict.not_rp_certificate))
                    throw InternalError("stored dual certificate fails verification");
            }
        } else {
            verdict.cls = RnClass::NOT_RN;
            verdict.t_star = rn.t_star;
        }
    }
    if (verdict.cls != RnClass::NOT_RN)
        verdict.witness_marginals = edge_marginals(g, trees, verdict.witness);

    auto matchings = enumerate_matchings(g, caps);
    verdict.near_perfect_matching = matchings.max_size >= g.vertex_count() / 2;
    verdict.one_tough = is_one_tough(g, caps).one_tough;

    if (verdict.cls == RnClass::RP && !verdict.one_tough)
        throw InternalError("RP verdict on a graph that is not 1-tough");
    if (verdict.cls != RnClass::NOT_RN && !verdict.near_perfect_matching)
        throw InternalError("RN verdict on a graph without a near-perfect matching");
    return verdict;
}

WitnessWeightsResult witness_weights(const Graph& g, const SpanningTreeSet& trees,
                                     const TreeDistribution& mu, double eps,
                                     const FitOptions& opt) {
    for (const auto& p : mu.prob)
        if (!(p > 0)) throw ParameterError("witness weights require a strictly positive distribution");
    auto marginals = edge_marginals(g, trees, mu);

    WitnessWeightsResult res;
    res.fit = fit_weights(g, marginals, opt);
    if (!res.fit.converged)
        throw ResourceError("weight fitting did not converge within " +
                            std::to_string(opt.max_iter) + " iterations (residual " +
                            std::to_string(res.fit.residual) + ")");
    res.curvature = curvature(g, res.fit.weights);
    res.min_curvature = *std::min_element(res.curvature.begin(), res.curvature.end());
    if (res.min_curvature < -eps)
        throw InternalError("fitted witness weights have curvature below -eps");
    return res;
}

} // namespace rescurv
