#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rescurv/capacity.hpp"
#include "rescurv/decide.hpp"
#include "rescurv/fitting.hpp"
#include "rescurv/graph.hpp"
#include "rescurv/polytope.hpp"
#include "rescurv/resistance.hpp"
#include "rescurv/transforms.hpp"

namespace rescurv {

using nlohmann::json;

/// Built-in graphs by keyword: petersen, path:n, cycle:n, complete:n,
/// kab:a,b, grid:n,m, plus compact aliases (p4, c6, k5, k23).
std::optional<Graph> parse_named_graph(const std::string& name);

/// Text format: a "n m" header then m lines "u v" (0-based); '#' starts a
/// comment. JSON alternative: {"n": int, "edges": [[u,v],...]}.
Graph parse_graph_text(std::istream& in);
Graph parse_graph_json(const json& j);

/// Loads a graph from a named keyword or a file path (text or JSON by
/// content sniffing).
Graph load_graph(const std::string& name_or_path);

/// Weight file: one line "u v weight" per edge, decimal or p/q literals,
/// every edge exactly once.
std::vector<Rat> parse_weights_text(std::istream& in, const Graph& g);
std::vector<Rat> load_weights(const std::string& path, const Graph& g);

std::vector<double> to_doubles(const std::vector<Rat>& v);
std::vector<Rat> to_rats(const std::vector<double>& v);

json rat_vec_json(const std::vector<Rat>& v);
json double_vec_json(const std::vector<double>& v);
json mat_json(const Mat<Rat>& m);
json graph_json(const Graph& g);

json profile_json(const Graph& g, const std::vector<Rat>& c, const ResistanceProfile<Rat>& pr);
json verdict_json(const Graph& g, const SpanningTreeSet& trees, const Verdict& v);
json fit_json(const Graph& g, const FitResult& fit, bool include_trace);
json transform_json(const TransformRecord<Rat>& rec);
json capacity_json(const CapacityTable& table);
json conjecture_json(const Graph& g, const ConjectureReport& rep);
json theta_json(const Graph& g, const IntegerPointsResult& pts);
json hyperplane_system_json(const HyperplaneSystem& sys);

/// Plain-text rendering of the same JSON payload (text output mode).
std::string render_text(const json& j);

} // namespace rescurv
