#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "rescurv/acceptance.hpp"
#include "rescurv/capacity.hpp"
#include "rescurv/corpus.hpp"
#include "rescurv/decide.hpp"
#include "rescurv/errors.hpp"
#include "rescurv/fitting.hpp"
#include "rescurv/io.hpp"
#include "rescurv/polytope.hpp"
#include "rescurv/resistance.hpp"
#include "rescurv/transforms.hpp"

namespace {

using rescurv::json;

struct CommonOpts {
    std::string graph;
    std::string weights_path;
    std::string mode = "exact";
    double tol = 1e-9;
    std::uint64_t seed = 12345;
    long cap_trees = 200000;
    std::string out = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_graph = true) {
    auto* g = cmd->add_option("--graph", o.graph, "built-in name (petersen, path:4, kab:2,3, ...) or file path");
    if (needs_graph) g->required();
    cmd->add_option("--weights", o.weights_path, "per-edge weight file: lines 'u v weight'");
    cmd->add_option("--mode", o.mode, "exact|numeric")->check(CLI::IsMember({"exact", "numeric"}));
    cmd->add_option("--tol", o.tol, "numeric tolerance / fit target residual");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--cap-trees", o.cap_trees, "spanning tree enumeration cap");
    cmd->add_option("--out", o.out, "json|text")->check(CLI::IsMember({"json", "text"}));
}

rescurv::Caps caps_from(const CommonOpts& o) {
    rescurv::Caps caps;
    if (o.cap_trees <= 0) throw rescurv::ParameterError("--cap-trees must be positive");
    caps.max_spanning_trees = o.cap_trees;
    return caps;
}

std::vector<rescurv::Rat> weights_or_unit(const CommonOpts& o, const rescurv::Graph& g) {
    if (o.weights_path.empty()) return std::vector<rescurv::Rat>(g.edge_count(), rescurv::Rat(1));
    return rescurv::load_weights(o.weights_path, g);
}

void emit(const CommonOpts& o, const json& j) {
    if (o.out == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << rescurv::render_text(j);
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> ids;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw rescurv::ParameterError("empty entry in vertex list");
            ids.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        } else {
            throw rescurv::ParameterError("vertex lists are comma-separated nonnegative integers");
        }
    }
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resistance curvature toolkit: exact curvature, RN/RP/SRN decisions, "
                 "polytope membership, graph transforms and capacity functions"};
    app.require_subcommand(1);

    CommonOpts curvature_o, decide_o, fit_o, kron_o, cinv_o, theta_o, capacity_o, conjecture_o,
        verify_o, gallery_o;

    auto* cmd_curvature = app.add_subcommand("curvature", "resistance profile and curvature");
    add_common(cmd_curvature, curvature_o);

    auto* cmd_decide = app.add_subcommand("decide", "classify the graph as RP / SRN / NOT_RN");
    add_common(cmd_decide, decide_o);

    auto* cmd_fit = app.add_subcommand("fit", "fit edge weights to target relative resistances");
    std::string fit_target;
    long fit_max_iter = 100000;
    bool fit_trace = false;
    add_common(cmd_fit, fit_o);
    cmd_fit->add_option("--target", fit_target,
                        "target file 'u v value'; defaults to r(weights) as a round trip");
    cmd_fit->add_option("--max-iter", fit_max_iter, "iteration cap");
    cmd_fit->add_flag("--trace", fit_trace, "include the per-iteration residual trace");

    auto* cmd_kron = app.add_subcommand("kron", "Kron reduction of a vertex set");
    std::string kron_vertices;
    add_common(cmd_kron, kron_o);
    cmd_kron->add_option("--remove", kron_vertices, "comma-separated vertices to eliminate")
        ->required();

    auto* cmd_cinv = app.add_subcommand("cinv", "circle inversion over a vertex");
    int cinv_vertex = 0;
    add_common(cmd_cinv, cinv_o);
    cmd_cinv->add_option("--vertex", cinv_vertex, "vertex to invert over")->required();

    auto* cmd_theta = app.add_subcommand("theta", "integer points of the k-dilated polytope");
    int theta_k = 1;
    add_common(cmd_theta, theta_o);
    cmd_theta->add_option("--k", theta_k, "dilation factor");

    auto* cmd_capacity = app.add_subcommand("capacity", "full resistance-capacity table");
    add_common(cmd_capacity, capacity_o);

    auto* cmd_conjecture =
        app.add_subcommand("conjecture", "sample weights; tabulate submodularity vs curvature");
    long conjecture_samples = 100;
    add_common(cmd_conjecture, conjecture_o);
    cmd_conjecture->add_option("--samples", conjecture_samples, "number of samples");

    auto* cmd_verify = app.add_subcommand("verify", "run the full invariant suite");
    add_common(cmd_verify, verify_o, false);

    auto* cmd_gallery = app.add_subcommand("gallery", "worked-examples table for the named graphs");
    add_common(cmd_gallery, gallery_o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_curvature->parsed()) {
            auto g = rescurv::load_graph(curvature_o.graph);
            auto c = weights_or_unit(curvature_o, g);
            if (curvature_o.mode == "numeric") {
                auto cd = rescurv::to_doubles(c);
                auto pr = rescurv::compute_profile(g, cd, false);
                json j;
                j["graph"] = rescurv::graph_json(g);
                j["weights"] = rescurv::double_vec_json(cd);
                j["relative_resistances"] = rescurv::double_vec_json(pr.relative_resistance);
                j["curvature"] = rescurv::double_vec_json(pr.curvature);
                emit(curvature_o, j);
            } else {
                auto pr = rescurv::compute_profile(g, c, true);
                emit(curvature_o, rescurv::profile_json(g, c, pr));
            }
            return 0;
        }
        if (cmd_decide->parsed()) {
            auto g = rescurv::load_graph(decide_o.graph);
            auto caps = caps_from(decide_o);
            auto verdict = rescurv::classify(g, caps);
            auto trees = rescurv::enumerate_spanning_trees(g, caps);
            emit(decide_o, rescurv::verdict_json(g, trees, verdict));
            return 0;
        }
        if (cmd_fit->parsed()) {
            auto g = rescurv::load_graph(fit_o.graph);
            std::vector<rescurv::Rat> target;
            if (!fit_target.empty()) {
                target = rescurv::load_weights(fit_target, g);  // same line format
            } else {
                auto c = weights_or_unit(fit_o, g);
                target = rescurv::relative_resistances(g, c);
            }
            rescurv::FitOptions opt;
            opt.tol = fit_o.tol;
            opt.max_iter = fit_max_iter;
            opt.record_trace = fit_trace;
            auto fit = rescurv::fit_weights(g, target, opt);
            emit(fit_o, rescurv::fit_json(g, fit, fit_trace));
            return 0;
        }
        if (cmd_kron->parsed()) {
            auto g = rescurv::load_graph(kron_o.graph);
            auto c = weights_or_unit(kron_o, g);
            auto rec = rescurv::kron_reduce(g, c, parse_id_list(kron_vertices));
            if (!rescurv::kron_curvature_check(rec))
                throw rescurv::InternalError("Kron curvature update mismatch");
            emit(kron_o, rescurv::transform_json(rec));
            return 0;
        }
        if (cmd_cinv->parsed()) {
            auto g = rescurv::load_graph(cinv_o.graph);
            auto c = weights_or_unit(cinv_o, g);
            auto rec = rescurv::circle_invert(g, c, cinv_vertex);
            if (!rescurv::cinv_curvature_check(rec))
                throw rescurv::InternalError("circle inversion curvature mismatch");
            emit(cinv_o, rescurv::transform_json(rec));
            return 0;
        }
        if (cmd_theta->parsed()) {
            auto g = rescurv::load_graph(theta_o.graph);
            auto pts = rescurv::theta_integer_points(g, theta_k, caps_from(theta_o));
            emit(theta_o, rescurv::theta_json(g, pts));
            return 0;
        }
        if (cmd_capacity->parsed()) {
            auto g = rescurv::load_graph(capacity_o.graph);
            auto c = weights_or_unit(capacity_o, g);
            auto cn = rescurv::normalize_weights(g, c);
            auto table = rescurv::full_table(g, cn, caps_from(capacity_o));
            emit(capacity_o, rescurv::capacity_json(table));
            return 0;
        }
        if (cmd_conjecture->parsed()) {
            auto g = rescurv::load_graph(conjecture_o.graph);
            auto rep = rescurv::conjecture_search(g, conjecture_samples, conjecture_o.seed,
                                                  caps_from(conjecture_o));
            emit(conjecture_o, rescurv::conjecture_json(g, rep));
            return 0;
        }
        if (cmd_verify->parsed()) {
            bool all_pass = true;
            auto results = rescurv::run_acceptance([&](const rescurv::CriterionResult& r) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " ("
                          << r.seconds << "s)" << (r.detail.empty() ? "" : ": " + r.detail)
                          << std::endl;
            });
            for (const auto& r : results) all_pass = all_pass && r.pass;
            return all_pass ? 0 : 3;
        }
        if (cmd_gallery->parsed()) {
            emit(gallery_o, rescurv::gallery_json());
            return 0;
        }
    } catch (const rescurv::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const rescurv::InternalError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const rescurv::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
