#include "rescurv/corpus.hpp"

#include <random>

#include "rescurv/decide.hpp"
#include "rescurv/io.hpp"
#include "rescurv/resistance.hpp"

namespace rescurv {

Graph bowtie_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph triangle_path_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
}

std::vector<NamedGraph> corpus() {
    std::vector<NamedGraph> out;
    for (int n = 2; n <= 5; ++n) out.push_back({"path:" + std::to_string(n), path_graph(n)});
    for (int n = 3; n <= 8; ++n) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
    out.push_back({"complete:4", complete_graph(4)});
    out.push_back({"complete:5", complete_graph(5)});
    out.push_back({"kab:2,3", complete_bipartite(2, 3)});
    out.push_back({"kab:2,4", complete_bipartite(2, 4)});
    out.push_back({"kab:3,3", complete_bipartite(3, 3)});
    out.push_back({"petersen", petersen_graph()});
    out.push_back({"grid:2,2", grid_graph(2, 2)});
    out.push_back({"grid:2,3", grid_graph(2, 3)});
    out.push_back({"grid:2,4", grid_graph(2, 4)});
    out.push_back({"grid:2,5", grid_graph(2, 5)});
    out.push_back({"grid:3,3", grid_graph(3, 3)});
    out.push_back({"grid:3,4", grid_graph(3, 4)});
    out.push_back({"grid:4,4", grid_graph(4, 4)});
    out.push_back({"bowtie", bowtie_graph()});
    out.push_back({"triangle_path", triangle_path_graph()});
    return out;
}

std::vector<Rat> random_int_weights(const Graph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> w(g.edge_count());
    for (auto& x : w) x = Rat(1 + static_cast<long>(rng() % 100));
    return w;
}

nlohmann::json gallery_json() {
    std::vector<std::string> names = {
        "path:2",  "path:3",  "path:4",  "path:5",  "cycle:3",  "cycle:4",  "cycle:5",
        "cycle:6", "complete:4", "complete:5", "kab:1,2", "kab:1,3", "kab:2,3", "kab:2,4",
        "kab:3,3", "kab:3,4", "petersen", "grid:2,2", "grid:2,3", "grid:2,4", "grid:2,5",
        "grid:3,3"};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& name : names) {
        Graph g = *parse_named_graph(name);
        auto trees = enumerate_spanning_trees(g);
        auto rn = decide_rn(g, trees);
        auto rp = decide_rp(g, trees);
        std::vector<Rat> unit(g.edge_count(), Rat(1));
        auto p = curvature(g, unit);
        auto matchings = enumerate_matchings(g);
        auto tough = is_one_tough(g);
        auto paths = hamiltonian_paths(g);

        std::string cls = rp.feasible ? "RP" : (rn.feasible ? "SRN" : "NOT_RN");
        nlohmann::json row;
        row["name"] = name;
        row["n"] = g.vertex_count();
        row["m"] = g.edge_count();
        row["spanning_trees"] = trees.size();
        row["hamiltonian_paths"] = static_cast<long>(paths.size());
        row["class"] = cls;
        row["t_star_rn"] = rn.t_star ? nlohmann::json(rat_str(*rn.t_star)) : nlohmann::json(nullptr);
        row["t_star_rp"] = rp.t_star ? nlohmann::json(rat_str(*rp.t_star)) : nlohmann::json(nullptr);
        row["curvature_unit_weights"] = rat_vec_json(p);
        row["one_tough"] = tough.one_tough;
        row["near_perfect_matching"] = matchings.max_size >= g.vertex_count() / 2;
        rows.push_back(row);
    }
    return nlohmann::json{{"gallery", rows}};
}

} // namespace rescurv
