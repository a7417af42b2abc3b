#pragma once

#include <string>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/matrix.hpp"
#include "rescurv/rational.hpp"
#include "rescurv/resistance.hpp"

namespace rescurv {

/// Record of one graph transform: input, output, relabeling, and the
/// curvature predicted by the update rule next to the curvature recomputed
/// from scratch on the output. The two must agree (exactly in rational mode).
template <class T>
struct TransformRecord {
    Graph input_graph;
    std::vector<T> input_weights;
    std::string operation;
    Graph output_graph;
    std::vector<T> output_weights;
    std::vector<int> vertex_map;  // input vertex -> output vertex, -1 if removed
    int new_vertex = -1;          // circle inversion only: id of the inverted vertex
    std::vector<T> predicted_curvature;   // per output vertex
    std::vector<T> recomputed_curvature;  // per output vertex
};

/// Kron reduction of a vertex set U with matched weights, built by
/// sequential single-vertex elimination and cross-checked against the Schur
/// complement of the Laplacian. Effective resistances among surviving
/// vertices are verified unchanged. The reduction of a connected graph is
/// connected: fill-in edges reach every boundary vertex of U.
template <class T>
TransformRecord<T> kron_reduce(const Graph& g, const std::vector<T>& c, std::vector<int> remove);

/// Does the record's predicted curvature match the recomputed one?
template <class T>
bool kron_curvature_check(const TransformRecord<T>& rec, double tol = 1e-9);

/// Circle inversion over x: the vertex is removed, a new vertex is attached
/// to every vertex of strictly positive curvature, and all weights are
/// rescaled by pairwise resistances through x. Requires p(c) >= 0 and a
/// connected result. The new vertex reuses x's id.
template <class T>
TransformRecord<T> circle_invert(const Graph& g, const std::vector<T>& c, int x);

template <class T>
bool cinv_curvature_check(const TransformRecord<T>& rec, double tol = 1e-9);

// Explicit instantiations are provided for Rat and double.

} // namespace rescurv
