#include "rescurv/transforms.hpp"

#include <algorithm>
#include <set>

namespace rescurv {

namespace {

template <class T>
std::string join_ids(const std::vector<T>& ids) {
    std::string s = "{";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ids[i]);
    }
    return s + "}";
}

} // namespace

template <class T>
TransformRecord<T> kron_reduce(const Graph& g, const std::vector<T>& c, std::vector<int> remove) {
    check_weights(g, c);
    if (!g.connected()) throw ParameterError("Kron reduction requires a connected graph");
    std::sort(remove.begin(), remove.end());
    remove.erase(std::unique(remove.begin(), remove.end()), remove.end());
    const int n = g.vertex_count();
    if (remove.empty()) throw ParameterError("Kron reduction needs a nonempty vertex set");
    if (static_cast<int>(remove.size()) >= n)
        throw ParameterError("Kron reduction must keep at least one vertex");
    for (int v : remove)
        if (v < 0 || v >= n) throw ParameterError("Kron reduction vertex out of range");

    TransformRecord<T> rec;
    rec.input_graph = g;
    rec.input_weights = c;
    rec.operation = "kron " + join_ids(remove);

    // Sequential single-vertex elimination on a dense weight table, carrying
    // the curvature prediction along.
    Mat<T> w(n, n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        w(u, v) = c[e];
        w(v, u) = c[e];
    }
    std::vector<T> p_pred = curvature(g, c);
    std::vector<char> alive(n, 1);
    for (int x : remove) {
        T strength(0);
        for (int y = 0; y < n; ++y)
            if (alive[y] && y != x) strength += w(x, y);
        if (ScalarTraits<T>::is_zero(strength))
            throw InternalError("eliminated vertex has no remaining neighbors");
        for (int v = 0; v < n; ++v)
            if (alive[v] && v != x && !ScalarTraits<T>::is_zero(w(x, v)))
                p_pred[v] += w(x, v) * p_pred[x] / strength;
        for (int u = 0; u < n; ++u) {
            if (!alive[u] || u == x || ScalarTraits<T>::is_zero(w(u, x))) continue;
            for (int v = u + 1; v < n; ++v) {
                if (!alive[v] || v == x || ScalarTraits<T>::is_zero(w(x, v))) continue;
                T add = w(u, x) * w(x, v) / strength;
                w(u, v) += add;
                w(v, u) += add;
            }
        }
        alive[x] = 0;
    }

    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        if (alive[v]) survivors.push_back(v);
    rec.vertex_map.assign(n, -1);
    for (size_t i = 0; i < survivors.size(); ++i) rec.vertex_map[survivors[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> out_edges;
    for (size_t i = 0; i < survivors.size(); ++i)
        for (size_t j = i + 1; j < survivors.size(); ++j)
            if (!ScalarTraits<T>::is_zero(w(survivors[i], survivors[j])))
                out_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    rec.output_graph = Graph(static_cast<int>(survivors.size()), out_edges);
    // Fill-in through eliminated vertices keeps the reduction connected
    // whenever the input is; this can only fire on a bug.
    if (!rec.output_graph.connected())
        throw ParameterError("Kron reduction produced a disconnected graph");
    rec.output_weights.resize(rec.output_graph.edge_count());
    for (int e = 0; e < rec.output_graph.edge_count(); ++e) {
        auto [i, j] = rec.output_graph.edge(e);
        rec.output_weights[e] = w(survivors[i], survivors[j]);
    }

    // Schur complement cross-check: the same weights must fall out of
    // L[W,W] - L[W,U] L[U,U]^{-1} L[U,W].
    {
        auto lap = weighted_laplacian(g, c);
        std::vector<int> u_set(remove.begin(), remove.end());
        auto luu = lap.submatrix(u_set, u_set);
        auto luu_inv = inverse(luu);
        if (!luu_inv) throw InternalError("L[U,U] must be invertible for connected G");
        auto schur = lap.submatrix(survivors, survivors) -
                     lap.submatrix(survivors, u_set) * (*luu_inv) * lap.submatrix(u_set, survivors);
        auto lap_out = weighted_laplacian(rec.output_graph, rec.output_weights);
        for (int i = 0; i < schur.rows(); ++i)
            for (int j = 0; j < schur.cols(); ++j)
                if (!ScalarTraits<T>::close(schur(i, j), lap_out(i, j), 1e-9))
                    throw InternalError(
                        "matched Kron weights disagree with the Schur complement");
    }

    // Effective resistances among survivors are preserved.
    {
        auto omega_in = compute_profile(g, c, false).omega;
        auto omega_out = compute_profile(rec.output_graph, rec.output_weights, false).omega;
        for (size_t i = 0; i < survivors.size(); ++i)
            for (size_t j = 0; j < survivors.size(); ++j)
                if (!ScalarTraits<T>::close(omega_in(survivors[i], survivors[j]),
                                            omega_out(static_cast<int>(i), static_cast<int>(j)),
                                            1e-9))
                    throw InternalError("Kron reduction changed a surviving effective resistance");
    }

    rec.predicted_curvature.resize(survivors.size());
    for (size_t i = 0; i < survivors.size(); ++i) rec.predicted_curvature[i] = p_pred[survivors[i]];
    rec.recomputed_curvature = curvature(rec.output_graph, rec.output_weights);
    return rec;
}

template <class T>
bool kron_curvature_check(const TransformRecord<T>& rec, double tol) {
    if (rec.predicted_curvature.size() != rec.recomputed_curvature.size()) return false;
    for (size_t i = 0; i < rec.predicted_curvature.size(); ++i)
        if (!ScalarTraits<T>::close(rec.predicted_curvature[i], rec.recomputed_curvature[i], tol))
            return false;
    return true;
}

template <class T>
TransformRecord<T> circle_invert(const Graph& g, const std::vector<T>& c, int x) {
    check_weights(g, c);
    if (!g.connected()) throw ParameterError("circle inversion requires a connected graph");
    const int n = g.vertex_count();
    if (x < 0 || x >= n) throw ParameterError("circle inversion vertex out of range");
    if (n < 2) throw ParameterError("circle inversion needs at least 2 vertices");

    auto pr = compute_profile(g, c, false);
    for (int v = 0; v < n; ++v)
        if (pr.curvature[v] < T(0))
            throw ParameterError("circle inversion precondition: curvature must be nonnegative");

    TransformRecord<T> rec;
    rec.input_graph = g;
    rec.input_weights = c;
    rec.operation = "cinv " + std::to_string(x);
    rec.new_vertex = x;  // the inverted vertex reuses x's id
    rec.vertex_map.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != x) rec.vertex_map[v] = v;

    std::vector<std::pair<int, int>> out_edges;
    std::vector<T> out_weights_by_pair;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (u == x || v == x) continue;
        out_edges.emplace_back(u, v);
        out_weights_by_pair.push_back(c[e] * pr.omega(u, x) * pr.omega(x, v));
    }
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (pr.curvature[y] > T(0)) {
            out_edges.emplace_back(x, y);
            out_weights_by_pair.push_back(T(2) * pr.curvature[y] * pr.omega(x, y));
        }
    }
    Graph out(n, out_edges);
    if (!out.connected())
        throw ParameterError(
            "circle inversion produced a disconnected graph (the new vertex only joins vertices "
            "of positive curvature)");
    rec.output_graph = out;
    rec.output_weights.resize(out.edge_count());
    for (size_t i = 0; i < out_edges.size(); ++i) {
        auto [u, v] = out_edges[i];
        rec.output_weights[out.edge_index(u, v)] = out_weights_by_pair[i];
    }
    for (const auto& wgt : rec.output_weights)
        if (!(wgt > T(0))) throw InternalError("circle inversion produced a nonpositive weight");

    rec.predicted_curvature.assign(n, T(0));
    rec.predicted_curvature[x] = pr.curvature[x];
    for (int v : g.neighbors(x))
        rec.predicted_curvature[v] =
            (T(1) / T(2)) * c[g.edge_index(x, v)] * pr.omega(x, v);
    rec.recomputed_curvature = curvature(out, rec.output_weights);
    return rec;
}

template <class T>
bool cinv_curvature_check(const TransformRecord<T>& rec, double tol) {
    if (rec.predicted_curvature.size() != rec.recomputed_curvature.size()) return false;
    for (size_t i = 0; i < rec.predicted_curvature.size(); ++i)
        if (!ScalarTraits<T>::close(rec.predicted_curvature[i], rec.recomputed_curvature[i], tol))
            return false;
    return true;
}

template TransformRecord<Rat> kron_reduce(const Graph&, const std::vector<Rat>&, std::vector<int>);
template TransformRecord<double> kron_reduce(const Graph&, const std::vector<double>&,
                                             std::vector<int>);
template bool kron_curvature_check(const TransformRecord<Rat>&, double);
template bool kron_curvature_check(const TransformRecord<double>&, double);
template TransformRecord<Rat> circle_invert(const Graph&, const std::vector<Rat>&, int);
template TransformRecord<double> circle_invert(const Graph&, const std::vector<double>&, int);
template bool cinv_curvature_check(const TransformRecord<Rat>&, double);
template bool cinv_curvature_check(const TransformRecord<double>&, double);

} // namespace rescurv
