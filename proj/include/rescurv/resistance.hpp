#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/matrix.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

/// Validates a weight vector for g: one strictly positive finite entry per
/// edge.
template <class T>
void check_weights(const Graph& g, const std::vector<T>& c) {
    if (static_cast<int>(c.size()) != g.edge_count())
        throw ParameterError("weight vector length does not match edge count");
    for (const auto& w : c) {
        if constexpr (!ScalarTraits<T>::exact) {
            if (!std::isfinite(w)) throw ParameterError("weights must be finite");
        }
        if (w <= T(0)) throw ParameterError("weights must be strictly positive");
    }
}

template <class T>
Mat<T> weighted_laplacian(const Graph& g, const std::vector<T>& c) {
    check_weights(g, c);
    const int n = g.vertex_count();
    Mat<T> lap(n, n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        lap(u, v) -= c[e];
        lap(v, u) -= c[e];
        lap(u, u) += c[e];
        lap(v, v) += c[e];
    }
    return lap;
}

/// Moore-Penrose pseudoinverse of a connected-graph Laplacian through the
/// bordered identity  L+ = (L + J/n)^{-1} - J/n,  which keeps everything in
/// rational arithmetic in exact mode.
template <class T>
Mat<T> laplacian_pseudoinverse(const Mat<T>& lap) {
    const int n = lap.rows();
    const T inv_n = T(1) / ScalarTraits<T>::from_int(n);
    Mat<T> shifted = lap;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shifted(i, j) += inv_n;
    auto inv = inverse(shifted);
    if (!inv) throw ParameterError("Laplacian pseudoinverse failed: graph must be connected");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) (*inv)(i, j) -= inv_n;
    return *inv;
}

template <class T>
Mat<T> resistance_matrix_from_pseudoinverse(const Mat<T>& pinv) {
    const int n = pinv.rows();
    Mat<T> omega(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) omega(i, j) = pinv(i, i) + pinv(j, j) - T(2) * pinv(i, j);
    return omega;
}

/// All the derived linear-algebra data for one weighted graph.
template <class T>
struct ResistanceProfile {
    Mat<T> laplacian;
    Mat<T> pseudoinverse;
    Mat<T> omega;                     // pairwise effective resistances
    std::optional<Mat<T>> inverse_resistance;  // K = omega^{-1}; absent for n < 2
    std::vector<T> relative_resistance;        // r_e = omega_e * c_e
    std::vector<T> curvature;                  // p_v = 1 - (sum of r at v)/2
};

template <class T>
ResistanceProfile<T> compute_profile(const Graph& g, const std::vector<T>& c, bool with_inverse = true) {
    if (!g.connected()) throw ParameterError("resistance profile requires a connected graph");
    ResistanceProfile<T> pr;
    pr.laplacian = weighted_laplacian(g, c);
    pr.pseudoinverse = laplacian_pseudoinverse(pr.laplacian);
    pr.omega = resistance_matrix_from_pseudoinverse(pr.pseudoinverse);
    pr.relative_resistance.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        pr.relative_resistance.push_back(pr.omega(u, v) * c[e]);
    }
    pr.curvature.assign(g.vertex_count(), T(1));
    const T half = T(1) / T(2);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        pr.curvature[u] -= half * pr.relative_resistance[e];
        pr.curvature[v] -= half * pr.relative_resistance[e];
    }
    if (with_inverse && g.vertex_count() >= 2) {
        auto k = inverse(pr.omega);
        if (!k) throw InternalError("resistance matrix of a connected graph must be invertible");
        pr.inverse_resistance = std::move(*k);
    }
    return pr;
}

template <class T>
std::vector<T> effective_resistances_on_edges(const Graph& g, const std::vector<T>& c) {
    auto pr = compute_profile(g, c, false);
    std::vector<T> out;
    out.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out.push_back(pr.omega(u, v));
    }
    return out;
}

template <class T>
std::vector<T> relative_resistances(const Graph& g, const std::vector<T>& c) {
    return compute_profile(g, c, false).relative_resistance;
}

template <class T>
std::vector<T> curvature(const Graph& g, const std::vector<T>& c) {
    return compute_profile(g, c, false).curvature;
}

struct FosterReport {
    bool global_ok = false;
    bool per_component_ok = false;
    Rat global_sum;
    std::vector<Rat> block_sums;
};

/// Checks the trace identities sum(r) = |V|-1 globally and per biconnected
/// component. Failures signal an internal bug, so they are reported rather
/// than thrown.
FosterReport foster_check(const Graph& g, const std::vector<Rat>& c);

/// Probability vector over an enumerated spanning tree set.
struct TreeDistribution {
    enum class Kind { log_linear, positive, non_separable, general };
    Kind kind = Kind::general;
    std::vector<Rat> prob;  // aligned with SpanningTreeSet order
};

/// Z_G(c): exact evaluation by tree enumeration, cross-checked against the
/// weighted Laplacian cofactor determinant.
Rat kirchhoff_polynomial(const Graph& g, const std::vector<Rat>& c, const Caps& caps = {});

/// Numeric-mode evaluation (cofactor determinant only).
double kirchhoff_polynomial_numeric(const Graph& g, const std::vector<double>& c);

TreeDistribution log_linear_distribution(const Graph& g, const std::vector<Rat>& c,
                                         const SpanningTreeSet& trees);

std::vector<Rat> edge_marginals(const Graph& g, const SpanningTreeSet& trees,
                                const TreeDistribution& mu);

/// Relative resistances by the defining spanning-tree ratio, and the
/// cross-check against the pseudoinverse route. Exact mode only.
std::vector<Rat> relative_resistances_by_trees(const Graph& g, const std::vector<Rat>& c,
                                               const Caps& caps = {});
std::vector<Rat> relative_resistances_checked(const Graph& g, const std::vector<Rat>& c,
                                              const Caps& caps = {});

/// Total sum of the inverse resistance matrix; weights are normalized when
/// this equals 1.
Rat inverse_resistance_total(const Graph& g, const std::vector<Rat>& c);

bool weights_normalized(const Graph& g, const std::vector<Rat>& c);

/// Rescales c by 1/sum(K) so the recomputed K sums to 1. Curvature is
/// unchanged (relative resistances are invariant under a global rescale).
std::vector<Rat> normalize_weights(const Graph& g, const std::vector<Rat>& c);

/// p_v = sum_u K_uv, valid for normalized weights only (checked).
std::vector<Rat> curvature_via_inverse_resistance(const Graph& g, const std::vector<Rat>& c_normalized);

struct KspaceReport {
    bool member = false;
    std::string violation;                 // empty when member
    std::optional<std::vector<Rat>> weights;  // reconstructed normalized weights
};

/// Membership of a symmetric invertible matrix in the set of inverse
/// resistance matrices of g with normalized weights: total sum 1, row-sum
/// products off the edges, strict excess on the edges. On success the
/// Laplacian L = -2K + 2(K1)(K1)^T is reconstructed, validated, and
/// round-tripped.
KspaceReport kspace_membership(const Graph& g, const Mat<Rat>& k_matrix);

} // namespace rescurv
