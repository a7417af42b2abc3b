#include "rescurv/capacity.hpp"

#include <algorithm>
#include <random>

#include "rescurv/resistance.hpp"

namespace rescurv {

namespace {

Rat capacity_from_omega(const Mat<Rat>& omega, uint64_t u_mask) {
    int size = __builtin_popcountll(u_mask);
    if (size == 0) return Rat(0);
    if (size == 1) return Rat(1, 2);
    auto idx = mask_to_indices(u_mask);
    auto sub = omega.submatrix(idx, idx);
    auto inv = inverse(sub);
    if (!inv) throw InternalError("Omega[U] must be invertible for |U| >= 2 on a connected graph");
    Rat total = inv->sum();
    if (total == 0) throw InternalError("Omega[U]^{-1} has zero total sum");
    return Rat(1, 2) + Rat(1, 2) / total;
}

Mat<Rat> normalized_omega(const Graph& g, const std::vector<Rat>& c_normalized) {
    if (g.vertex_count() < 2)
        throw ParameterError("resistance capacity needs at least 2 vertices");
    auto pr = compute_profile(g, c_normalized, true);
    if (pr.inverse_resistance->sum() != 1)
        throw ParameterError("resistance capacity requires normalized weights (sum K != 1)");
    return pr.omega;
}

} // namespace

Rat resistance_capacity(const Graph& g, const std::vector<Rat>& c_normalized, uint64_t u_mask) {
    if (u_mask >= (1ULL << g.vertex_count()))
        throw ParameterError("subset mask out of range");
    return capacity_from_omega(normalized_omega(g, c_normalized), u_mask);
}

CapacityTable full_table(const Graph& g, const std::vector<Rat>& c_normalized, const Caps& caps) {
    const int n = g.vertex_count();
    if (n > caps.max_capacity_vertices)
        throw ResourceError("capacity table cap (" + std::to_string(caps.max_capacity_vertices) +
                            " vertices) exceeded");
    auto omega = normalized_omega(g, c_normalized);

    CapacityTable table;
    table.n = n;
    table.weights_normalized = c_normalized;
    table.tau.resize(1ULL << n);
    for (uint64_t u = 0; u < (1ULL << n); ++u) table.tau[u] = capacity_from_omega(omega, u);

    // Structural invariants hold for every valid table; violations are bugs.
    if (table.tau[0] != 0) throw InternalError("tau of the empty set must be 0");
    if (table.tau[(1ULL << n) - 1] != 1)
        throw InternalError("tau of the full vertex set must be 1 under normalized weights");
    for (int v = 0; v < n; ++v)
        if (table.tau[1ULL << v] != Rat(1, 2)) throw InternalError("singleton tau must be 1/2");
    for (uint64_t u = 0; u < (1ULL << n); ++u) {
        if (table.tau[u] < 0 || table.tau[u] > 1)
            throw InternalError("tau outside [0,1]");
        for (int v = 0; v < n; ++v) {
            if (u >> v & 1) continue;
            if (table.tau[u] > table.tau[u | (1ULL << v)])
                throw InternalError("tau must be monotone under inclusion");
        }
    }
    return table;
}

SubmodularReport is_submodular(const CapacityTable& table) {
    SubmodularReport rep;
    rep.min_slack = 0;
    bool first = true;
    const uint64_t full = 1ULL << table.n;
    for (uint64_t a = 0; a < full; ++a)
        for (uint64_t b = a + 1; b < full; ++b) {
            if ((a & b) == a || (a & b) == b) continue;  // nested: identically zero slack
            Rat slack = table.tau[a] + table.tau[b] - table.tau[a | b] - table.tau[a & b];
            if (first || slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.worst_a = a;
                rep.worst_b = b;
                first = false;
            }
        }
    rep.submodular = rep.min_slack >= 0;
    return rep;
}

RecoveredGraph recover_graph(int n, const std::vector<Rat>& pair_tau,
                             const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.size() != pair_tau.size())
        throw ParameterError("pair list and tau list differ in length");
    Mat<Rat> omega(n, n);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("invalid vertex pair in capacity data");
        Rat w = Rat(4) * pair_tau[i] - 2;
        omega(u, v) = w;
        omega(v, u) = w;
        seen[u][v] = seen[v][u] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen[u][v]) throw ParameterError("capacity data misses a vertex pair");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(omega(u, v) > 0))
                throw ParameterError("capacity data implies a nonpositive resistance");

    auto k = inverse(omega);
    if (!k) throw ParameterError("capacity data implies a singular resistance matrix");
    auto row = k->row_sums();
    Mat<Rat> lap(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) lap(u, v) = Rat(-2) * (*k)(u, v) + Rat(2) * row[u] * row[v];
    auto lap_rows = lap.row_sums();
    for (int u = 0; u < n; ++u)
        if (lap_rows[u] != 0)
            throw ParameterError("capacity data is inconsistent (non-normalized resistance matrix)");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (lap(u, v) < 0)
                edges.emplace_back(u, v);
            else if (lap(u, v) > 0)
                throw ParameterError("capacity data implies a positive Laplacian off-diagonal");
        }
    RecoveredGraph rec{Graph(n, edges), {}};
    if (!rec.graph.connected())
        throw ParameterError("capacity data implies a disconnected graph");
    rec.weights.resize(rec.graph.edge_count());
    for (int e = 0; e < rec.graph.edge_count(); ++e) {
        auto [u, v] = rec.graph.edge(e);
        rec.weights[e] = -lap(u, v);
    }

    // Certify: the recovered graph must reproduce the input resistances.
    auto pr = compute_profile(rec.graph, rec.weights, false);
    if (!(pr.omega == omega))
        throw ParameterError("capacity data is not realized by any weighted graph");
    return rec;
}

RecoveredGraph recover_graph(const CapacityTable& table) {
    std::vector<Rat> pair_tau;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < table.n; ++u)
        for (int v = u + 1; v < table.n; ++v) {
            pairs.emplace_back(u, v);
            pair_tau.push_back(table.of((1ULL << u) | (1ULL << v)));
        }
    return recover_graph(table.n, pair_tau, pairs);
}

ConjectureReport conjecture_search(const Graph& g, long samples, uint64_t seed, const Caps& caps) {
    if (!g.connected()) throw ParameterError("conjecture search requires a connected graph");
    ConjectureReport rep;
    for (long s = 0; s < samples; ++s) {
        std::mt19937_64 rng(split_seed(seed, static_cast<uint64_t>(s)));
        std::vector<Rat> c(g.edge_count());
        for (auto& w : c) w = Rat(1 + static_cast<long>(rng() % 100));
        c = normalize_weights(g, c);

        auto table = full_table(g, c, caps);
        auto sub = is_submodular(table);
        auto p = curvature(g, c);
        Rat min_p = p.empty() ? Rat(0) : *std::min_element(p.begin(), p.end());
        bool nonneg = min_p >= 0;

        ++rep.samples;
        if (sub.submodular && nonneg) ++rep.submodular_and_nonneg;
        if (sub.submodular && !nonneg) ++rep.submodular_and_neg;
        if (!sub.submodular && nonneg) ++rep.nonsub_and_nonneg;
        if (!sub.submodular && !nonneg) ++rep.nonsub_and_neg;

        if (nonneg && !sub.submodular && !rep.theorem_violation)
            rep.theorem_violation = ConjectureSample{c, sub.submodular, min_p, nonneg};
        if (sub.submodular && !nonneg && !rep.counterexample)
            rep.counterexample = ConjectureSample{c, sub.submodular, min_p, nonneg};
    }
    return rep;
}

} // namespace rescurv
