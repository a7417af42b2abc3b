#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rescurv/graph.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// The 25-graph test corpus: paths, cycles, small complete and complete
/// bipartite graphs, the Petersen graph, grids up to 4x4, and two
/// block-glued graphs.
std::vector<NamedGraph> corpus();

/// Two triangles sharing one vertex.
Graph bowtie_graph();
/// A triangle with a two-edge path hanging off one vertex.
Graph triangle_path_graph();

/// Uniform integer weights in [1,100], reproducible from the seed.
std::vector<Rat> random_int_weights(const Graph& g, uint64_t seed);

/// Worked-examples table over the named small graphs: counts, curvature at
/// unit weights, classification, and flags. Deterministic; byte-identical
/// across runs in exact mode.
nlohmann::json gallery_json();

} // namespace rescurv
