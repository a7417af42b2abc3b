#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rescurv/errors.hpp"

namespace rescurv {

/// Enumeration and search caps. Exceeding a cap raises ResourceError naming
/// it; decision procedures never fall back to heuristics.
struct Caps {
    long max_spanning_trees = 200000;
    long max_matchings = 200000;
    int max_toughness_vertices = 16;
    int max_automorphism_vertices = 16;
    int max_eager_constraint_edges = 20;  // eager 2^|E| constraint generation
    int max_capacity_vertices = 14;       // 2^|V| capacity tables
    long max_integer_point_candidates = 5000000;
    long max_lp_pivots = 500000;
};

/// Simple loopless undirected graph. Edges are stored sorted
/// lexicographically after normalizing u < v; the position in that list is
/// the canonical edge index used by every vector indexed over E.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    /// -1 when uv is not an edge.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool connected() const;
    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Named constructions.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
/// Cartesian product of two paths; grid_graph(1, m) is a path.
Graph grid_graph(int rows, int cols);

/// Biconnected components; every edge belongs to exactly one block.
struct BlockDecomposition {
    std::vector<std::vector<int>> block_edges;     // sorted edge indices per block
    std::vector<std::vector<int>> block_vertices;  // sorted vertex ids per block
    std::vector<int> cut_vertices;                 // sorted
    std::vector<int> block_of_edge;                // edge index -> block id
};
BlockDecomposition biconnected_components(const Graph& g);

/// All spanning trees as edge-index bitmasks in a deterministic canonical
/// order (ascending as integers, which is lex order on reversed index sets).
struct SpanningTreeSet {
    std::vector<uint64_t> masks;
    long size() const { return static_cast<long>(masks.size()); }
    std::vector<int> tree_edges(long t) const;
};
SpanningTreeSet enumerate_spanning_trees(const Graph& g, const Caps& caps = {});

/// Weighted (or unweighted) spanning-tree count via a Laplacian cofactor
/// determinant; the matrix-tree cross-check for the enumerator.
long matrix_tree_count(const Graph& g);

/// All matchings, including the empty one.
struct MatchingSet {
    std::vector<uint64_t> masks;
    int max_size = 0;
    long size() const { return static_cast<long>(masks.size()); }
};
MatchingSet enumerate_matchings(const Graph& g, const Caps& caps = {});

/// Hamiltonian paths as undirected edge sets, canonically ordered.
std::vector<uint64_t> hamiltonian_paths(const Graph& g);

/// Does a Hamiltonian cycle exist? (backtracking search)
bool has_hamiltonian_cycle(const Graph& g);

struct ToughnessReport {
    bool one_tough = true;
    std::vector<int> worst_set;  // U maximizing components(G-U) - |U|
    int worst_components = 0;
    int worst_excess = 0;  // components - |U| at the witness
};
ToughnessReport is_one_tough(const Graph& g, const Caps& caps = {});

/// Exact brute-force automorphism search; answers whether the automorphism
/// group acts transitively on vertices.
bool is_vertex_transitive(const Graph& g, const Caps& caps = {});

// Mask helpers shared by enumeration consumers.
std::vector<int> mask_to_indices(uint64_t mask);
std::vector<int> tree_degrees(const Graph& g, uint64_t edge_mask);

} // namespace rescurv
