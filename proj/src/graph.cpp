#include "rescurv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rescurv/matrix.hpp"

namespace rescurv {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw ParameterError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ParameterError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParameterError("parallel edge in input");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back(e);
        inc_[v].push_back(e);
    }
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

Graph path_graph(int n) {
    if (n < 1) throw ParameterError("path graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParameterError("cycle graph needs n >= 3 (smaller cycles are not simple)");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ParameterError("complete bipartite graph needs both part sizes >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, e);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw ParameterError("grid graph needs both sides >= 1");
    auto id = [cols](int i, int j) { return i * cols + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i + 1 < rows) e.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < cols) e.emplace_back(id(i, j), id(i, j + 1));
        }
    return Graph(rows * cols, e);
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> depth, low;
    std::vector<char> visited, is_cut;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          depth(graph.vertex_count(), 0),
          low(graph.vertex_count(), 0),
          visited(graph.vertex_count(), 0),
          is_cut(graph.vertex_count(), 0) {}

    void pop_block(int until_edge) {
        std::vector<int> blk;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(e);
            if (e == until_edge) break;
        }
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    }

    void dfs(int v, int parent_edge, int d) {
        visited[v] = 1;
        depth[v] = low[v] = d;
        int children = 0;
        for (int e : g.incident_edges(v)) {
            if (e == parent_edge) continue;
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (!visited[w]) {
                edge_stack.push_back(e);
                ++children;
                dfs(w, e, d + 1);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= depth[v]) {
                    if (depth[v] > 0 || children > 1) is_cut[v] = 1;
                    pop_block(e);
                }
            } else if (depth[w] < depth[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], depth[w]);
            }
        }
    }
};

} // namespace

BlockDecomposition biconnected_components(const Graph& g) {
    if (!g.connected()) throw ParameterError("biconnected components require a connected graph");
    BlockFinder finder(g);
    if (g.vertex_count() > 0) finder.dfs(0, -1, 0);

    BlockDecomposition out;
    out.block_edges = std::move(finder.blocks);
    std::sort(out.block_edges.begin(), out.block_edges.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.block_of_edge.assign(g.edge_count(), -1);
    for (size_t b = 0; b < out.block_edges.size(); ++b) {
        std::set<int> verts;
        for (int e : out.block_edges[b]) {
            out.block_of_edge[e] = static_cast<int>(b);
            verts.insert(g.edge(e).first);
            verts.insert(g.edge(e).second);
        }
        out.block_vertices.emplace_back(verts.begin(), verts.end());
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

std::vector<int> SpanningTreeSet::tree_edges(long t) const { return mask_to_indices(masks[t]); }

namespace {

// Connectivity of (V, allowed edges): used to prune the exclusion branch of
// the contraction/deletion recursion.
bool spans_connected(const Graph& g, uint64_t allowed) {
    Dsu dsu(g.vertex_count());
    int comps = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e)
        if (allowed >> e & 1)
            if (dsu.unite(g.edge(e).first, g.edge(e).second)) --comps;
    return comps == 1;
}

struct TreeEnumerator {
    const Graph& g;
    long cap;
    std::vector<uint64_t>& out;
    int n;

    void recurse(int next_edge, uint64_t chosen, int chosen_count, uint64_t available, Dsu dsu) {
        if (chosen_count == n - 1) {
            if (static_cast<long>(out.size()) >= cap)
                throw ResourceError("spanning tree cap (" + std::to_string(cap) + ") exceeded");
            out.push_back(chosen);
            return;
        }
        if (next_edge >= g.edge_count()) return;

        auto [u, v] = g.edge(next_edge);
        // Include branch: only if it keeps the chosen set acyclic.
        {
            Dsu d2 = dsu;
            if (d2.unite(u, v))
                recurse(next_edge + 1, chosen | (1ULL << next_edge), chosen_count + 1, available, d2);
        }
        // Exclude branch: only if the remaining edges can still span.
        uint64_t rest = available & ~(1ULL << next_edge);
        if (spans_connected(g, rest)) recurse(next_edge + 1, chosen, chosen_count, rest, dsu);
    }
};

} // namespace

SpanningTreeSet enumerate_spanning_trees(const Graph& g, const Caps& caps) {
    if (!g.connected()) throw ParameterError("spanning tree enumeration requires a connected graph");
    if (g.edge_count() > 64) throw ResourceError("spanning tree enumeration supports at most 64 edges");
    SpanningTreeSet set;
    if (g.vertex_count() <= 1) {
        set.masks.push_back(0);
        return set;
    }
    uint64_t all = g.edge_count() == 64 ? ~0ULL : ((1ULL << g.edge_count()) - 1);
    TreeEnumerator en{g, caps.max_spanning_trees, set.masks, g.vertex_count()};
    en.recurse(0, 0, 0, all, Dsu(g.vertex_count()));
    std::sort(set.masks.begin(), set.masks.end());
    if (std::adjacent_find(set.masks.begin(), set.masks.end()) != set.masks.end())
        throw InternalError("duplicate spanning tree emitted");
    return set;
}

long matrix_tree_count(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 1;
    Mat<Rat> lap(n, n);
    for (auto [u, v] : g.edges()) {
        lap(u, u) += 1;
        lap(v, v) += 1;
        lap(u, v) -= 1;
        lap(v, u) -= 1;
    }
    std::vector<int> keep;
    for (int i = 1; i < n; ++i) keep.push_back(i);
    Rat det = determinant(lap.submatrix(keep, keep));
    return static_cast<long>(det.get_d() + 0.5);
}

namespace {

void matchings_rec(const Graph& g, int next_edge, uint64_t covered, uint64_t mask, int size,
                   MatchingSet& out, long cap) {
    if (next_edge == g.edge_count()) {
        if (static_cast<long>(out.masks.size()) >= cap)
            throw ResourceError("matching cap (" + std::to_string(cap) + ") exceeded");
        out.masks.push_back(mask);
        out.max_size = std::max(out.max_size, size);
        return;
    }
    matchings_rec(g, next_edge + 1, covered, mask, size, out, cap);
    auto [u, v] = g.edge(next_edge);
    if (!(covered >> u & 1) && !(covered >> v & 1))
        matchings_rec(g, next_edge + 1, covered | (1ULL << u) | (1ULL << v),
                      mask | (1ULL << next_edge), size + 1, out, cap);
}

} // namespace

MatchingSet enumerate_matchings(const Graph& g, const Caps& caps) {
    if (g.edge_count() > 64) throw ResourceError("matching enumeration supports at most 64 edges");
    MatchingSet out;
    matchings_rec(g, 0, 0, 0, 0, out, caps.max_matchings);
    std::sort(out.masks.begin(), out.masks.end());
    return out;
}

namespace {

struct PathSearcher {
    const Graph& g;
    std::vector<uint64_t> found;

    void dfs(int start, int cur, uint64_t visited, uint64_t edges, int count) {
        if (count == g.vertex_count()) {
            if (cur > start) found.push_back(edges);
            return;
        }
        for (int w : g.neighbors(cur)) {
            if (visited >> w & 1) continue;
            int e = g.edge_index(cur, w);
            dfs(start, w, visited | (1ULL << w), edges | (1ULL << e), count + 1);
        }
    }
};

} // namespace

std::vector<uint64_t> hamiltonian_paths(const Graph& g) {
    if (g.edge_count() > 64) throw ResourceError("hamiltonian path search supports at most 64 edges");
    if (g.vertex_count() == 1) return {0};
    PathSearcher s{g, {}};
    for (int v = 0; v < g.vertex_count(); ++v) s.dfs(v, v, 1ULL << v, 0, 1);
    std::sort(s.found.begin(), s.found.end());
    s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
    return s.found;
}

namespace {

bool ham_cycle_dfs(const Graph& g, int cur, uint64_t visited, int count) {
    if (count == g.vertex_count()) return g.adjacent(cur, 0);
    for (int w : g.neighbors(cur)) {
        if (visited >> w & 1) continue;
        if (ham_cycle_dfs(g, w, visited | (1ULL << w), count + 1)) return true;
    }
    return false;
}

} // namespace

bool has_hamiltonian_cycle(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    return ham_cycle_dfs(g, 0, 1, 1);
}

namespace {

int components_after_removal(const Graph& g, uint64_t removed) {
    Dsu dsu(g.vertex_count());
    int comps = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!(removed >> v & 1)) ++comps;
    for (auto [u, v] : g.edges())
        if (!(removed >> u & 1) && !(removed >> v & 1))
            if (dsu.unite(u, v)) --comps;
    return comps;
}

} // namespace

ToughnessReport is_one_tough(const Graph& g, const Caps& caps) {
    int n = g.vertex_count();
    if (n > caps.max_toughness_vertices)
        throw ResourceError("toughness cap (" + std::to_string(caps.max_toughness_vertices) +
                            " vertices) exceeded");
    if (!g.connected()) throw ParameterError("toughness requires a connected graph");
    ToughnessReport rep;
    rep.worst_excess = -n;
    for (uint64_t u = 1; u + 1 < (1ULL << n); ++u) {
        int size = __builtin_popcountll(u);
        int comps = components_after_removal(g, u);
        if (comps >= 2 && comps > size) rep.one_tough = false;
        int excess = comps - size;
        if (excess > rep.worst_excess ||
            (excess == rep.worst_excess && comps > rep.worst_components)) {
            rep.worst_excess = excess;
            rep.worst_components = comps;
            rep.worst_set = mask_to_indices(u);
        }
    }
    return rep;
}

namespace {

// Extends a partial vertex mapping to a full automorphism; mapping[v] == -1
// means unassigned.
bool extend_automorphism(const Graph& g, std::vector<int>& mapping, std::vector<char>& used, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    if (mapping[v] >= 0) return extend_automorphism(g, mapping, used, v + 1);
    for (int target = 0; target < n; ++target) {
        if (used[target] || g.degree(target) != g.degree(v)) continue;
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) {
            if (mapping[w] < 0) continue;
            if (g.adjacent(v, w) != g.adjacent(target, mapping[w])) ok = false;
        }
        if (!ok) continue;
        mapping[v] = target;
        used[target] = 1;
        if (extend_automorphism(g, mapping, used, v + 1)) return true;
        mapping[v] = -1;
        used[target] = 0;
    }
    return false;
}

} // namespace

bool is_vertex_transitive(const Graph& g, const Caps& caps) {
    int n = g.vertex_count();
    if (n > caps.max_automorphism_vertices)
        throw ResourceError("automorphism cap (" + std::to_string(caps.max_automorphism_vertices) +
                            " vertices) exceeded");
    if (n <= 1) return true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    for (int target = 1; target < n; ++target) {
        std::vector<int> mapping(n, -1);
        std::vector<char> used(n, 0);
        mapping[0] = target;
        used[target] = 1;
        if (!extend_automorphism(g, mapping, used, 1)) return false;
    }
    return true;
}

std::vector<int> mask_to_indices(uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

std::vector<int> tree_degrees(const Graph& g, uint64_t edge_mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_mask >> e & 1) {
            ++deg[g.edge(e).first];
            ++deg[g.edge(e).second];
        }
    return deg;
}

} // namespace rescurv
