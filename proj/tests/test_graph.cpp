#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rescurv/corpus.hpp"
#include "rescurv/graph.hpp"
#include "test_oracles.hpp"

using namespace rescurv;

TEST_CASE("graph construction canonicalizes and validates") {
    Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 2) == -1);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), ParameterError);
    CHECK_THROWS_AS(Graph(-1, {}), ParameterError);
}

TEST_CASE("named constructions") {
    auto c3 = cycle_graph(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    auto g22 = grid_graph(2, 2);
    CHECK(g22.vertex_count() == 4);
    CHECK(g22.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g22.degree(v) == 2);  // the 4-cycle

    auto pet = petersen_graph();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    CHECK(grid_graph(1, 4).edge_count() == 3);  // a path
    CHECK(complete_bipartite(2, 3).edge_count() == 6);

    CHECK_THROWS_AS(cycle_graph(2), ParameterError);
    CHECK_THROWS_AS(path_graph(0), ParameterError);
    CHECK_THROWS_AS(grid_graph(0, 3), ParameterError);
}

TEST_CASE("biconnected components") {
    SUBCASE("every tree edge is its own block") {
        auto b = biconnected_components(path_graph(3));
        CHECK(b.block_edges.size() == 2);
        CHECK(b.cut_vertices == std::vector<int>{1});
    }
    SUBCASE("cycles are one block") {
        auto b = biconnected_components(cycle_graph(5));
        CHECK(b.block_edges.size() == 1);
        CHECK(b.block_edges[0].size() == 5);
        CHECK(b.cut_vertices.empty());
    }
    SUBCASE("two triangles sharing a vertex split into two blocks") {
        Graph g = bowtie_graph();
        auto b = biconnected_components(g);
        CHECK(b.block_edges.size() == 2);
        CHECK(b.cut_vertices == std::vector<int>{2});
        // independent check: removing vertex 2 disconnects the graph
        std::vector<std::pair<int, int>> rest;
        for (auto [u, v] : g.edges())
            if (u != 2 && v != 2) rest.emplace_back(u > 2 ? u - 1 : u, v > 2 ? v - 1 : v);
        CHECK(!Graph(4, rest).connected());
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(biconnected_components(Graph(2, {})), ParameterError);
    }
}

TEST_CASE("spanning tree enumeration") {
    SUBCASE("triangle has exactly its three pairs") {
        auto trees = enumerate_spanning_trees(cycle_graph(3));
        CHECK(trees.masks == std::vector<uint64_t>{0b011, 0b101, 0b110});
    }
    SUBCASE("complete graph count matches the determinant") {
        auto trees = enumerate_spanning_trees(complete_graph(4));
        CHECK(trees.size() == 16);
        CHECK(matrix_tree_count(complete_graph(4)) == 16);
    }
    SUBCASE("a tree has itself only") {
        auto trees = enumerate_spanning_trees(path_graph(5));
        CHECK(trees.size() == 1);
        CHECK(trees.masks[0] == 0b1111);
    }
    SUBCASE("agrees with brute force and the determinant on the corpus") {
        for (const auto& [name, g] : corpus()) {
            if (g.edge_count() > 14) continue;
            auto trees = enumerate_spanning_trees(g);
            CHECK_MESSAGE(trees.masks == oracle::brute_spanning_trees(g), name);
            CHECK_MESSAGE(trees.size() == matrix_tree_count(g), name);
        }
    }
    SUBCASE("cap raises a resource error") {
        Caps caps;
        caps.max_spanning_trees = 10;
        CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(4), caps), ResourceError);
    }
    SUBCASE("every spanning tree has block-size-minus-one edges per block") {
        for (const Graph& g : {bowtie_graph(), triangle_path_graph()}) {
            auto blocks = biconnected_components(g);
            for (uint64_t mask : enumerate_spanning_trees(g).masks)
                for (size_t b = 0; b < blocks.block_edges.size(); ++b) {
                    int inside = 0;
                    for (int e : blocks.block_edges[b])
                        if (mask >> e & 1) ++inside;
                    CHECK(inside == static_cast<int>(blocks.block_vertices[b].size()) - 1);
                }
        }
    }
}

TEST_CASE("matching enumeration") {
    auto m4 = enumerate_matchings(cycle_graph(4));
    CHECK(m4.size() == 7);  // empty + 4 single edges + 2 perfect
    CHECK(m4.max_size == 2);
    CHECK(m4.masks.front() == 0);  // includes the empty matching

    auto k2 = enumerate_matchings(complete_graph(2));
    CHECK(k2.size() == 2);

    CHECK(enumerate_matchings(cycle_graph(6)).max_size == 3);

    // every reported matching covers each vertex at most once
    Graph g = petersen_graph();
    auto ms = enumerate_matchings(g);
    CHECK(ms.size() == 332);  // brute-force count established beforehand
    for (uint64_t mask : ms.masks) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            if (mask >> e & 1) {
                ++deg[g.edge(e).first];
                ++deg[g.edge(e).second];
            }
        CHECK(*std::max_element(deg.begin(), deg.end()) <= 1);
    }

    Caps caps;
    caps.max_matchings = 5;
    CHECK_THROWS_AS(enumerate_matchings(cycle_graph(4), caps), ResourceError);
}

TEST_CASE("hamiltonian paths") {
    CHECK(hamiltonian_paths(complete_graph(4)).size() == 12);
    CHECK(hamiltonian_paths(cycle_graph(4)).size() == 4);
    CHECK(hamiltonian_paths(complete_bipartite(1, 3)).empty());
    CHECK(hamiltonian_paths(complete_bipartite(2, 4)).empty());  // parts differ by 2

    // paths are spanning trees
    Graph g = grid_graph(2, 3);
    auto trees = enumerate_spanning_trees(g);
    for (uint64_t p : hamiltonian_paths(g)) {
        CHECK(std::binary_search(trees.masks.begin(), trees.masks.end(), p));
        auto deg = tree_degrees(g, p);
        int ones = 0;
        for (int d : deg) {
            CHECK(d <= 2);
            if (d == 1) ++ones;
        }
        CHECK(ones == 2);
    }
}

TEST_CASE("hamiltonian cycle detection") {
    CHECK(has_hamiltonian_cycle(cycle_graph(5)));
    CHECK(has_hamiltonian_cycle(complete_graph(4)));
    CHECK(has_hamiltonian_cycle(grid_graph(2, 3)));
    CHECK(!has_hamiltonian_cycle(petersen_graph()));
    CHECK(!has_hamiltonian_cycle(path_graph(4)));
    CHECK(!has_hamiltonian_cycle(grid_graph(3, 3)));  // odd bipartite
}

TEST_CASE("toughness") {
    CHECK(is_one_tough(cycle_graph(5)).one_tough);
    auto star = is_one_tough(complete_bipartite(1, 3));
    CHECK(!star.one_tough);
    CHECK(star.worst_set == std::vector<int>{0});  // the center
    CHECK(star.worst_components == 3);
    CHECK(is_one_tough(petersen_graph()).one_tough);
    CHECK(is_one_tough(complete_graph(5)).one_tough);  // vacuous: no cut set

    Caps caps;
    caps.max_toughness_vertices = 4;
    CHECK_THROWS_AS(is_one_tough(cycle_graph(5), caps), ResourceError);
}

TEST_CASE("vertex transitivity") {
    for (int n = 3; n <= 7; ++n) CHECK(is_vertex_transitive(cycle_graph(n)));
    CHECK(!is_vertex_transitive(path_graph(3)));
    CHECK(is_vertex_transitive(petersen_graph()));
    CHECK(is_vertex_transitive(complete_graph(5)));
    CHECK(!is_vertex_transitive(complete_bipartite(2, 3)));
    CHECK(is_vertex_transitive(complete_bipartite(3, 3)));
    CHECK(!is_vertex_transitive(grid_graph(2, 3)));
}

TEST_CASE("corpus has the advertised 25 graphs, all connected") {
    auto c = corpus();
    CHECK(c.size() == 25);
    std::set<std::string> names;
    for (const auto& [name, g] : c) {
        CHECK(g.connected());
        names.insert(name);
    }
    CHECK(names.size() == 25);
}
