#include "rescurv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rescurv {

namespace {

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    try {
        size_t pos = 0;
        out = std::stoi(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<std::vector<int>> parse_args(const std::string& spec, size_t count) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : spec + ",") {
        if (ch == ',') {
            int v;
            if (!parse_int(cur, v)) return std::nullopt;
            vals.push_back(v);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (vals.size() != count) return std::nullopt;
    return vals;
}

} // namespace

std::optional<Graph> parse_named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();

    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon), rest = name.substr(colon + 1);
        if (kind == "path")
            if (auto a = parse_args(rest, 1)) return path_graph((*a)[0]);
        if (kind == "cycle")
            if (auto a = parse_args(rest, 1)) return cycle_graph((*a)[0]);
        if (kind == "complete")
            if (auto a = parse_args(rest, 1)) return complete_graph((*a)[0]);
        if (kind == "kab")
            if (auto a = parse_args(rest, 2)) return complete_bipartite((*a)[0], (*a)[1]);
        if (kind == "grid")
            if (auto a = parse_args(rest, 2)) return grid_graph((*a)[0], (*a)[1]);
        return std::nullopt;
    }

    // Compact aliases: p5, c6, k5, k23.
    if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
        char kind = name[0];
        std::string digits = name.substr(1);
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        if (kind == 'p' && digits.size() <= 2) return path_graph(std::stoi(digits));
        if (kind == 'c' && digits.size() <= 2) return cycle_graph(std::stoi(digits));
        if (kind == 'k' && digits.size() == 1) return complete_graph(std::stoi(digits));
        if (kind == 'k' && digits.size() == 2)
            return complete_bipartite(digits[0] - '0', digits[1] - '0');
    }
    return std::nullopt;
}

Graph parse_graph_text(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || m < 0) throw ParameterError("graph header must be nonnegative 'n m'");
                continue;
            }
            std::string leftover;
            if (ls.clear(), std::istringstream(line) >> leftover)
                throw ParameterError("bad graph header at line " + std::to_string(line_no));
            continue;  // blank line before header
        }
        int u, v;
        if (ls >> u >> v) {
            edges.emplace_back(u, v);
        } else {
            std::string leftover;
            if (std::istringstream(line) >> leftover)
                throw ParameterError("bad edge line " + std::to_string(line_no));
        }
    }
    if (n < 0) throw ParameterError("graph file is missing the 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParameterError("graph file announced " + std::to_string(m) + " edges but lists " +
                             std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph parse_graph_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParameterError("graph JSON needs fields 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParameterError("graph JSON edge must be [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("n").get<int>(), edges);
}

Graph load_graph(const std::string& name_or_path) {
    if (auto g = parse_named_graph(name_or_path)) return *g;
    std::ifstream in(name_or_path);
    if (!in)
        throw ParameterError("'" + name_or_path +
                             "' is neither a built-in graph name nor a readable file");
    // Content sniff: JSON starts with '{'.
    int ch = in.peek();
    while (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
        in.get();
        ch = in.peek();
    }
    if (ch == '{') {
        json j;
        in >> j;
        return parse_graph_json(j);
    }
    return parse_graph_text(in);
}

std::vector<Rat> parse_weights_text(std::istream& in, const Graph& g) {
    std::vector<Rat> w(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        std::string lit;
        if (!(ls >> u >> v >> lit)) {
            std::string leftover;
            if (std::istringstream(line) >> leftover)
                throw ParameterError("bad weight line " + std::to_string(line_no));
            continue;
        }
        int e = g.edge_index(u, v);
        if (e < 0)
            throw ParameterError("weight line " + std::to_string(line_no) + " names a non-edge " +
                                 std::to_string(u) + " " + std::to_string(v));
        if (seen[e])
            throw ParameterError("duplicate weight for edge " + std::to_string(u) + " " +
                                 std::to_string(v));
        w[e] = rat_parse(lit);
        seen[e] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen[e])
            throw ParameterError("weight file misses edge " + std::to_string(g.edge(e).first) +
                                 " " + std::to_string(g.edge(e).second));
    return w;
}

std::vector<Rat> load_weights(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read weight file '" + path + "'");
    return parse_weights_text(in, g);
}

std::vector<double> to_doubles(const std::vector<Rat>& v) {
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
    return out;
}

std::vector<Rat> to_rats(const std::vector<double>& v) {
    std::vector<Rat> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat_from_double(v[i]);
    return out;
}

json rat_vec_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(rat_str(q));
    return arr;
}

json double_vec_json(const std::vector<double>& v) {
    json arr = json::array();
    for (double d : v) arr.push_back(d);
    return arr;
}

json mat_json(const Mat<Rat>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

json profile_json(const Graph& g, const std::vector<Rat>& c, const ResistanceProfile<Rat>& pr) {
    json j;
    j["graph"] = graph_json(g);
    j["weights"] = rat_vec_json(c);
    j["laplacian"] = mat_json(pr.laplacian);
    j["pseudoinverse"] = mat_json(pr.pseudoinverse);
    j["omega"] = mat_json(pr.omega);
    if (pr.inverse_resistance) j["inverse_resistance"] = mat_json(*pr.inverse_resistance);
    j["relative_resistances"] = rat_vec_json(pr.relative_resistance);
    j["curvature"] = rat_vec_json(pr.curvature);
    auto foster = foster_check(g, c);
    j["foster"] = json{{"global", foster.global_ok},
                       {"per_component", foster.per_component_ok},
                       {"global_sum", rat_str(foster.global_sum)}};
    return j;
}

json verdict_json(const Graph& g, const SpanningTreeSet& trees, const Verdict& v) {
    json j;
    j["class"] = to_string(v.cls);
    j["t_star"] = v.t_star ? json(rat_str(*v.t_star)) : json(nullptr);
    j["t_star_rn"] = v.t_star_rn ? json(rat_str(*v.t_star_rn)) : json(nullptr);
    j["t_star_rp"] = v.t_star_rp ? json(rat_str(*v.t_star_rp)) : json(nullptr);
    j["tree_count"] = v.tree_count;
    j["flags"] = json{{"near_perfect_matching", v.near_perfect_matching},
                      {"one_tough", v.one_tough}};
    if (v.cls != RnClass::NOT_RN) {
        json wt = json::array();
        for (long t = 0; t < trees.size(); ++t) {
            json edges = json::array();
            for (int e : trees.tree_edges(t)) edges.push_back(e);
            wt.push_back(json{{"edges", edges}, {"prob", rat_str(v.witness.prob[t])}});
        }
        j["witness_trees"] = wt;
        j["marginals"] = rat_vec_json(v.witness_marginals);
    }
    if (!v.not_rp_certificate.empty()) j["not_rp_certificate"] = rat_vec_json(v.not_rp_certificate);
    j["graph"] = graph_json(g);
    return j;
}

json fit_json(const Graph& g, const FitResult& fit, bool include_trace) {
    json j;
    j["graph"] = graph_json(g);
    j["weights"] = double_vec_json(fit.weights);
    j["iterations"] = fit.iterations;
    j["residual"] = fit.residual;
    j["converged"] = fit.converged;
    if (include_trace) j["residual_trace"] = double_vec_json(fit.residual_trace);
    return j;
}

json transform_json(const TransformRecord<Rat>& rec) {
    json j;
    j["operation"] = rec.operation;
    j["input"] = json{{"graph", graph_json(rec.input_graph)},
                      {"weights", rat_vec_json(rec.input_weights)}};
    j["output"] = json{{"graph", graph_json(rec.output_graph)},
                       {"weights", rat_vec_json(rec.output_weights)}};
    json vm = json::array();
    for (int v : rec.vertex_map) vm.push_back(v);
    j["vertex_map"] = vm;
    if (rec.new_vertex >= 0) j["new_vertex"] = rec.new_vertex;
    j["predicted_curvature"] = rat_vec_json(rec.predicted_curvature);
    j["recomputed_curvature"] = rat_vec_json(rec.recomputed_curvature);
    return j;
}

json capacity_json(const CapacityTable& table) {
    json vals = json::object();
    for (uint64_t u = 0; u < table.tau.size(); ++u)
        vals[std::to_string(u)] = rat_str(table.tau[u]);
    return json{{"n", table.n},
                {"weights_normalized", rat_vec_json(table.weights_normalized)},
                {"tau_by_subset_mask", vals}};
}

json conjecture_json(const Graph& g, const ConjectureReport& rep) {
    json j;
    j["graph"] = graph_json(g);
    j["samples"] = rep.samples;
    j["counts"] = json{{"submodular_and_nonneg", rep.submodular_and_nonneg},
                       {"submodular_and_neg", rep.submodular_and_neg},
                       {"nonsub_and_nonneg", rep.nonsub_and_nonneg},
                       {"nonsub_and_neg", rep.nonsub_and_neg}};
    auto sample_json = [&](const ConjectureSample& s) {
        return json{{"weights_normalized", rat_vec_json(s.weights_normalized)},
                    {"submodular", s.submodular},
                    {"min_curvature", rat_str(s.min_curvature)},
                    {"curvature_nonnegative", s.curvature_nonnegative}};
    };
    j["counterexample"] = rep.counterexample ? sample_json(*rep.counterexample) : json(nullptr);
    j["theorem_violation"] =
        rep.theorem_violation ? sample_json(*rep.theorem_violation) : json(nullptr);
    return j;
}

json theta_json(const Graph& g, const IntegerPointsResult& pts) {
    json points = json::array();
    for (const auto& p : pts.points) {
        json row = json::array();
        for (int v : p) row.push_back(v);
        points.push_back(row);
    }
    return json{{"graph", graph_json(g)},
                {"k", pts.k},
                {"count", static_cast<long>(pts.points.size())},
                {"points", points}};
}

json hyperplane_system_json(const HyperplaneSystem& sys) {
    json rows = json::array();
    for (const auto& c : sys.rows) {
        json edges = json::array();
        for (int e : mask_to_indices(c.edge_mask)) edges.push_back(e);
        rows.push_back(json{{"edges", edges},
                            {"bound", rat_str(c.bound)},
                            {"equality", c.equality_implied},
                            {"tag", c.describe()}});
    }
    return json{{"num_edges", sys.num_edges}, {"rows", rows}};
}

namespace {

void render_rec(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_primitive()) {
                out += prefix + it.key() + ": " + it.value().dump() + "\n";
            } else {
                out += prefix + it.key() + ":\n";
                render_rec(it.value(), prefix + "  ", out);
            }
        }
    } else if (j.is_array()) {
        bool all_primitive = true;
        for (const auto& v : j)
            if (!v.is_primitive()) all_primitive = false;
        if (all_primitive) {
            out += prefix + j.dump() + "\n";
        } else {
            for (size_t i = 0; i < j.size(); ++i) {
                out += prefix + "- [" + std::to_string(i) + "]\n";
                render_rec(j[i], prefix + "  ", out);
            }
        }
    } else {
        out += prefix + j.dump() + "\n";
    }
}

} // namespace

std::string render_text(const json& j) {
    std::string out;
    render_rec(j, "", out);
    return out;
}

} // namespace rescurv
