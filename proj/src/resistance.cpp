#include "rescurv/resistance.hpp"

#include <algorithm>

namespace rescurv {

FosterReport foster_check(const Graph& g, const std::vector<Rat>& c) {
    auto r = relative_resistances(g, c);
    FosterReport rep;
    rep.global_sum = 0;
    for (const auto& x : r) rep.global_sum += x;
    rep.global_ok = rep.global_sum == Rat(g.vertex_count() - 1);

    auto blocks = biconnected_components(g);
    rep.per_component_ok = true;
    for (size_t b = 0; b < blocks.block_edges.size(); ++b) {
        Rat s = 0;
        for (int e : blocks.block_edges[b]) s += r[e];
        rep.block_sums.push_back(s);
        if (s != Rat(static_cast<long>(blocks.block_vertices[b].size()) - 1))
            rep.per_component_ok = false;
    }
    return rep;
}

namespace {

Rat tree_weight_product(const std::vector<Rat>& c, uint64_t mask) {
    Rat prod(1);
    for (int e = 0; mask; ++e, mask >>= 1)
        if (mask & 1) prod *= c[e];
    return prod;
}

} // namespace

Rat kirchhoff_polynomial(const Graph& g, const std::vector<Rat>& c, const Caps& caps) {
    check_weights(g, c);
    auto trees = enumerate_spanning_trees(g, caps);
    Rat z(0);
    for (uint64_t mask : trees.masks) z += tree_weight_product(c, mask);

    // Weighted matrix-tree cross-check: any Laplacian cofactor must agree.
    if (g.vertex_count() >= 2) {
        auto lap = weighted_laplacian(g, c);
        std::vector<int> keep;
        for (int i = 1; i < g.vertex_count(); ++i) keep.push_back(i);
        Rat det = determinant(lap.submatrix(keep, keep));
        if (det != z)
            throw InternalError("Kirchhoff polynomial mismatch between enumeration and determinant");
    }
    return z;
}

double kirchhoff_polynomial_numeric(const Graph& g, const std::vector<double>& c) {
    check_weights(g, c);
    if (g.vertex_count() <= 1) return 1.0;
    auto lap = weighted_laplacian(g, c);
    std::vector<int> keep;
    for (int i = 1; i < g.vertex_count(); ++i) keep.push_back(i);
    return determinant(lap.submatrix(keep, keep));
}

TreeDistribution log_linear_distribution(const Graph& g, const std::vector<Rat>& c,
                                         const SpanningTreeSet& trees) {
    check_weights(g, c);
    TreeDistribution mu;
    mu.kind = TreeDistribution::Kind::log_linear;
    mu.prob.reserve(trees.masks.size());
    Rat z(0);
    for (uint64_t mask : trees.masks) {
        Rat p = tree_weight_product(c, mask);
        mu.prob.push_back(p);
        z += p;
    }
    for (auto& p : mu.prob) p /= z;
    return mu;
}

std::vector<Rat> edge_marginals(const Graph& g, const SpanningTreeSet& trees,
                                const TreeDistribution& mu) {
    if (mu.prob.size() != trees.masks.size())
        throw ParameterError("distribution is not aligned with the spanning tree set");
    Rat total(0);
    for (const auto& p : mu.prob) {
        if (p < 0) throw ParameterError("distribution has a negative probability");
        total += p;
    }
    if (total != 1) throw ParameterError("distribution probabilities must sum to 1");
    std::vector<Rat> marg(g.edge_count(), Rat(0));
    for (size_t t = 0; t < trees.masks.size(); ++t) {
        uint64_t mask = trees.masks[t];
        for (int e = 0; mask; ++e, mask >>= 1)
            if (mask & 1) marg[e] += mu.prob[t];
    }
    return marg;
}

std::vector<Rat> relative_resistances_by_trees(const Graph& g, const std::vector<Rat>& c,
                                               const Caps& caps) {
    check_weights(g, c);
    auto trees = enumerate_spanning_trees(g, caps);
    Rat z(0);
    std::vector<Rat> num(g.edge_count(), Rat(0));
    for (uint64_t mask : trees.masks) {
        Rat prod = tree_weight_product(c, mask);
        z += prod;
        uint64_t m = mask;
        for (int e = 0; m; ++e, m >>= 1)
            if (m & 1) num[e] += prod;
    }
    for (auto& x : num) x /= z;
    return num;
}

std::vector<Rat> relative_resistances_checked(const Graph& g, const std::vector<Rat>& c,
                                              const Caps& caps) {
    auto via_pinv = relative_resistances(g, c);
    auto via_trees = relative_resistances_by_trees(g, c, caps);
    if (via_pinv != via_trees)
        throw InternalError("relative resistance mismatch between pseudoinverse and tree routes");
    return via_pinv;
}

Rat inverse_resistance_total(const Graph& g, const std::vector<Rat>& c) {
    if (g.vertex_count() < 2)
        throw ParameterError("inverse resistance matrix needs at least 2 vertices");
    auto pr = compute_profile(g, c, true);
    return pr.inverse_resistance->sum();
}

bool weights_normalized(const Graph& g, const std::vector<Rat>& c) {
    return inverse_resistance_total(g, c) == 1;
}

std::vector<Rat> normalize_weights(const Graph& g, const std::vector<Rat>& c) {
    Rat total = inverse_resistance_total(g, c);
    if (total <= 0) throw InternalError("inverse resistance matrix has nonpositive total sum");
    std::vector<Rat> out = c;
    for (auto& w : out) w /= total;
    return out;
}

std::vector<Rat> curvature_via_inverse_resistance(const Graph& g,
                                                  const std::vector<Rat>& c_normalized) {
    auto pr = compute_profile(g, c_normalized, true);
    if (pr.inverse_resistance->sum() != 1)
        throw ParameterError("curvature via K requires normalized weights (sum K != 1)");
    std::vector<Rat> p(g.vertex_count(), Rat(0));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u = 0; u < g.vertex_count(); ++u) p[v] += (*pr.inverse_resistance)(u, v);
    return p;
}

KspaceReport kspace_membership(const Graph& g, const Mat<Rat>& k_matrix) {
    const int n = g.vertex_count();
    KspaceReport rep;
    if (k_matrix.rows() != n || k_matrix.cols() != n)
        throw ParameterError("K matrix dimension does not match the graph");
    if (!k_matrix.is_symmetric()) throw ParameterError("K matrix must be symmetric");
    if (!inverse(k_matrix)) throw ParameterError("K matrix must be invertible");

    if (k_matrix.sum() != 1) {
        rep.violation = "total sum of K is " + rat_str(k_matrix.sum()) + ", expected 1";
        return rep;
    }
    auto row = k_matrix.row_sums();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Rat product = row[u] * row[v];
            bool edge = g.adjacent(u, v);
            if (edge && !(k_matrix(u, v) > product)) {
                rep.violation = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") lacks strict excess over row-sum product";
                return rep;
            }
            if (!edge && k_matrix(u, v) != product) {
                rep.violation = "non-edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") violates the row-sum product equality";
                return rep;
            }
        }

    // Reconstruct L = -2K + 2(K1)(K1)^T and read the weights off it.
    std::vector<Rat> weights(g.edge_count());
    Mat<Rat> lap(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) lap(u, v) = Rat(-2) * k_matrix(u, v) + Rat(2) * row[u] * row[v];
    auto lap_rows = lap.row_sums();
    for (int u = 0; u < n; ++u)
        if (lap_rows[u] != 0) throw InternalError("reconstructed Laplacian has nonzero row sum");
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!(lap(u, v) < 0)) throw InternalError("reconstructed Laplacian misses an edge weight");
        weights[e] = -lap(u, v);
    }

    // Full round trip: the reconstructed weighted graph must reproduce K.
    auto pr = compute_profile(g, weights, true);
    if (!(pr.inverse_resistance && *pr.inverse_resistance == k_matrix))
        throw InternalError("K membership round trip failed to reproduce the input matrix");
    rep.member = true;
    rep.weights = std::move(weights);
    return rep;
}

} // namespace rescurv
