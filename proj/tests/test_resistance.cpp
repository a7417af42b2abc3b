#include <doctest.h>

#include <random>

#include "rescurv/corpus.hpp"
#include "rescurv/resistance.hpp"
#include "test_oracles.hpp"

using namespace rescurv;

namespace {
std::vector<Rat> unit(const Graph& g) { return std::vector<Rat>(g.edge_count(), Rat(1)); }
}

TEST_CASE("weighted laplacian") {
    auto k2 = weighted_laplacian(complete_graph(2), unit(complete_graph(2)));
    CHECK(k2(0, 0) == 1);
    CHECK(k2(0, 1) == -1);
    CHECK(k2(1, 1) == 1);

    auto p3 = weighted_laplacian(path_graph(3), unit(path_graph(3)));
    CHECK(p3(0, 0) == 1);
    CHECK(p3(1, 1) == 2);
    CHECK(p3(2, 2) == 1);
    CHECK(p3(0, 2) == 0);

    Graph c3 = cycle_graph(3);
    auto lap = weighted_laplacian(c3, std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
    for (const auto& s : lap.row_sums()) CHECK(s == 0);

    CHECK_THROWS_AS(weighted_laplacian(c3, std::vector<Rat>{Rat(1), Rat(2)}), ParameterError);
    CHECK_THROWS_AS(weighted_laplacian(c3, std::vector<Rat>{Rat(1), Rat(0), Rat(1)}), ParameterError);
    CHECK_THROWS_AS(weighted_laplacian(c3, std::vector<Rat>{Rat(1), Rat(-2), Rat(1)}), ParameterError);
}

TEST_CASE("effective resistances match series law and tree ratios") {
    Graph p3 = path_graph(3);
    auto pr = compute_profile(p3, unit(p3), false);
    CHECK(pr.omega(0, 1) == 1);
    CHECK(pr.omega(0, 2) == 2);
    CHECK(pr.omega(0, 0) == 0);

    Graph c3 = cycle_graph(3);
    auto prc = compute_profile(c3, unit(c3), false);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) CHECK(prc.omega(u, v) == Rat(2, 3));

    Graph c4 = cycle_graph(4);
    auto pr4 = compute_profile(c4, unit(c4), false);
    CHECK(pr4.omega(0, 1) == Rat(3, 4));
    CHECK(pr4.omega(0, 3) == Rat(3, 4));
    CHECK(pr4.omega(0, 2) == Rat(1));  // opposite corners

    CHECK_THROWS_AS(compute_profile(Graph(2, {}), std::vector<Rat>{}, false), ParameterError);
}

TEST_CASE("pseudoinverse and tree-ratio resistances agree on random weights") {
    std::mt19937_64 rng(11);
    for (const Graph& g : {cycle_graph(4), complete_graph(4), bowtie_graph(), grid_graph(2, 3),
                           complete_bipartite(2, 3)}) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rat> c(g.edge_count());
            for (auto& w : c) w = rat_frac(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
            auto via_pinv = relative_resistances(g, c);
            CHECK(via_pinv == oracle::brute_relative_resistances(g, c));
            CHECK(relative_resistances_checked(g, c) == via_pinv);
        }
    }
}

TEST_CASE("relative resistances on special graphs") {
    Graph p4 = path_graph(4);
    for (const auto& r : relative_resistances(p4, unit(p4))) CHECK(r == 1);

    for (const auto& r : relative_resistances(cycle_graph(3), unit(cycle_graph(3))))
        CHECK(r == Rat(2, 3));

    for (const auto& r : relative_resistances(complete_graph(4), unit(complete_graph(4))))
        CHECK(r == Rat(1, 2));
}

TEST_CASE("curvature values") {
    auto pc3 = curvature(cycle_graph(3), unit(cycle_graph(3)));
    CHECK(pc3 == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});

    auto pp3 = curvature(path_graph(3), unit(path_graph(3)));
    CHECK(pp3 == std::vector<Rat>{Rat(1, 2), Rat(0), Rat(1, 2)});

    auto pk23 = curvature(complete_bipartite(2, 3), unit(complete_bipartite(2, 3)));
    CHECK(pk23 == std::vector<Rat>{Rat(0), Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("curvature sums to 1 on every weighted graph") {
    std::mt19937_64 rng(5);
    for (const auto& [name, g] : corpus()) {
        auto c = random_int_weights(g, rng());
        auto p = curvature(g, c);
        Rat total(0);
        for (const auto& x : p) total += x;
        CHECK_MESSAGE(total == 1, name);
    }
}

TEST_CASE("foster check, global and per block") {
    auto rep = foster_check(cycle_graph(5), unit(cycle_graph(5)));
    CHECK(rep.global_ok);
    CHECK(rep.global_sum == 4);
    CHECK(rep.per_component_ok);

    std::mt19937_64 rng(17);
    Graph bt = bowtie_graph();
    auto c = random_int_weights(bt, rng());
    auto btr = foster_check(bt, c);
    CHECK(btr.global_ok);
    CHECK(btr.per_component_ok);
    for (const auto& s : btr.block_sums) CHECK(s == 2);  // each triangle block

    auto tr = foster_check(path_graph(4), unit(path_graph(4)));
    CHECK(tr.global_ok);
    CHECK(tr.global_sum == 3);
}

TEST_CASE("kirchhoff polynomial") {
    CHECK(kirchhoff_polynomial(cycle_graph(3), unit(cycle_graph(3))) == 3);
    CHECK(kirchhoff_polynomial(cycle_graph(3), std::vector<Rat>{Rat(1), Rat(2), Rat(3)}) == 11);
    CHECK(kirchhoff_polynomial(complete_graph(2), std::vector<Rat>{Rat(7, 3)}) == Rat(7, 3));

    // numeric route: r_e * Z = c_e * dZ/dc_e via central differences
    Graph g = cycle_graph(4);
    std::vector<double> c{1.0, 2.0, 0.5, 1.5};
    double z = kirchhoff_polynomial_numeric(g, c);
    auto r = relative_resistances(g, c);
    for (int e = 0; e < g.edge_count(); ++e) {
        double h = 1e-6;
        auto cp = c, cm = c;
        cp[e] += h;
        cm[e] -= h;
        double dz = (kirchhoff_polynomial_numeric(g, cp) - kirchhoff_polynomial_numeric(g, cm)) / (2 * h);
        CHECK(std::fabs(r[e] * z - c[e] * dz) < 1e-5);
    }
}

TEST_CASE("log-linear distribution and marginals") {
    Graph c3 = cycle_graph(3);
    auto trees = enumerate_spanning_trees(c3);

    auto mu_unit = log_linear_distribution(c3, unit(c3), trees);
    for (const auto& p : mu_unit.prob) CHECK(p == Rat(1, 3));

    // weighted case cross-checked against the direct product evaluation
    std::vector<Rat> c{Rat(1), Rat(2), Rat(3)};
    auto mu = log_linear_distribution(c3, c, trees);
    Rat z(0);
    std::vector<Rat> want;
    for (uint64_t mask : trees.masks) {
        Rat prod(1);
        for (int e = 0; e < 3; ++e)
            if (mask >> e & 1) prod *= c[e];
        want.push_back(prod);
        z += prod;
    }
    CHECK(z == 11);
    for (size_t i = 0; i < want.size(); ++i) CHECK(mu.prob[i] == want[i] / z);

    Graph p4 = path_graph(4);
    auto tp = enumerate_spanning_trees(p4);
    auto mup = log_linear_distribution(p4, unit(p4), tp);
    CHECK(mup.prob == std::vector<Rat>{Rat(1)});
}

TEST_CASE("edge marginals") {
    Graph c4 = cycle_graph(4);
    auto trees = enumerate_spanning_trees(c4);

    TreeDistribution uniform;
    uniform.prob.assign(4, Rat(1, 4));
    auto marg = edge_marginals(c4, trees, uniform);
    for (const auto& x : marg) CHECK(x == Rat(3, 4));

    TreeDistribution point;
    point.prob = {Rat(1), Rat(0), Rat(0), Rat(0)};
    auto indicator = edge_marginals(c4, trees, point);
    for (int e = 0; e < 4; ++e) CHECK(indicator[e] == ((trees.masks[0] >> e & 1) ? 1 : 0));

    TreeDistribution bad;
    bad.prob.assign(3, Rat(1, 3));
    CHECK_THROWS_AS(edge_marginals(c4, trees, bad), ParameterError);
    TreeDistribution bad2;
    bad2.prob = {Rat(1), Rat(1), Rat(-1), Rat(0)};
    CHECK_THROWS_AS(edge_marginals(c4, trees, bad2), ParameterError);
}

TEST_CASE("log-linear marginals equal relative resistances") {
    std::mt19937_64 rng(23);
    for (const auto& [name, g] : corpus()) {
        if (g.vertex_count() > 8 || g.edge_count() > 12) continue;
        auto trees = enumerate_spanning_trees(g);
        for (int rep = 0; rep < 3; ++rep) {
            auto c = random_int_weights(g, rng());
            auto mu = log_linear_distribution(g, c, trees);
            CHECK_MESSAGE(edge_marginals(g, trees, mu) == relative_resistances(g, c), name);
        }
    }
}

TEST_CASE("normalization") {
    Graph k2 = complete_graph(2);
    auto cn = normalize_weights(k2, unit(k2));
    CHECK(cn == std::vector<Rat>{Rat(1, 2)});
    CHECK(weights_normalized(k2, cn));
    CHECK(normalize_weights(k2, cn) == cn);  // idempotent

    Graph c3 = cycle_graph(3);
    auto c3n = normalize_weights(c3, unit(c3));
    CHECK(weights_normalized(c3, c3n));
    CHECK(curvature(c3, c3n) == curvature(c3, unit(c3)));  // global rescale keeps p

    std::mt19937_64 rng(3);
    for (const auto& [name, g] : corpus()) {
        if (g.vertex_count() < 2 || g.vertex_count() > 10) continue;
        auto c = random_int_weights(g, rng());
        auto n1 = normalize_weights(g, c);
        CHECK_MESSAGE(weights_normalized(g, n1), name);
        CHECK_MESSAGE(normalize_weights(g, n1) == n1, name);
        CHECK_MESSAGE(curvature(g, n1) == curvature(g, c), name);
    }
}

TEST_CASE("curvature via the inverse resistance matrix") {
    Graph c3 = cycle_graph(3);
    auto cn = normalize_weights(c3, unit(c3));
    CHECK(curvature_via_inverse_resistance(c3, cn) == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});

    Graph k23 = complete_bipartite(2, 3);
    auto kn = normalize_weights(k23, unit(k23));
    CHECK(curvature_via_inverse_resistance(k23, kn) ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)});

    // formula-vs-formula agreement on a non-biconnected graph
    Graph p3 = path_graph(3);
    auto pn = normalize_weights(p3, unit(p3));
    CHECK(curvature_via_inverse_resistance(p3, pn) == curvature(p3, pn));

    CHECK_THROWS_AS(curvature_via_inverse_resistance(c3, unit(c3)), ParameterError);
}

TEST_CASE("inverse resistance matrix membership") {
    Graph c3 = cycle_graph(3);
    auto cn = normalize_weights(c3, unit(c3));
    auto pr = compute_profile(c3, cn, true);

    auto ok = kspace_membership(c3, *pr.inverse_resistance);
    CHECK(ok.member);
    REQUIRE(ok.weights.has_value());
    CHECK(*ok.weights == cn);

    // scaling K breaks the total-sum condition
    auto scaled = pr.inverse_resistance->scaled(Rat(2));
    auto bad = kspace_membership(c3, scaled);
    CHECK(!bad.member);
    CHECK(bad.violation.find("total sum") != std::string::npos);

    // the K of a 4-cycle does not match the triangle's edge pattern
    Graph c4 = cycle_graph(4);
    auto c4n = normalize_weights(c4, unit(c4));
    auto pr4 = compute_profile(c4, c4n, true);
    CHECK_THROWS_AS(kspace_membership(c3, *pr4.inverse_resistance), ParameterError);  // size mismatch

    Graph k4 = complete_graph(4);
    auto wrong = kspace_membership(k4, *pr4.inverse_resistance);
    CHECK(!wrong.member);  // edge-pattern mismatch
}

TEST_CASE("bipartite curvature sum rule") {
    // For parts (A,B): sum_{v in A} p_v = |A| - (|V|-1)/2, since every edge
    // has exactly one endpoint in A.
    std::mt19937_64 rng(31);
    auto check_rule = [&](const Graph& g, const std::vector<int>& part_a) {
        auto c = random_int_weights(g, rng());
        auto p = curvature(g, c);
        Rat sum(0);
        for (int v : part_a) sum += p[v];
        CHECK(sum == Rat(static_cast<long>(part_a.size())) - rat_frac(g.vertex_count() - 1, 2));
    };
    check_rule(complete_bipartite(2, 3), {0, 1});
    check_rule(complete_bipartite(3, 3), {0, 1, 2});
    check_rule(cycle_graph(6), {0, 2, 4});
}

TEST_CASE("cut vertices have nonpositive curvature, zero only between two bridges") {
    // A cut vertex has p <= 0 for every weighting; equality forces both its
    // relative resistances to be 1, i.e. the vertex has degree 2 and both
    // edges are bridges (it is interior to an induced path segment).
    std::mt19937_64 rng(37);
    for (const Graph& g : {bowtie_graph(), triangle_path_graph(), complete_bipartite(1, 3)}) {
        auto blocks = biconnected_components(g);
        for (int rep = 0; rep < 5; ++rep) {
            auto c = random_int_weights(g, rng());
            auto p = curvature(g, c);
            for (int x : blocks.cut_vertices) {
                CHECK(p[x] <= 0);
                bool two_bridges = g.degree(x) == 2;
                for (int e : g.incident_edges(x))
                    two_bridges = two_bridges && blocks.block_edges[blocks.block_of_edge[e]].size() == 1;
                if (two_bridges)
                    CHECK(p[x] == 0);
                else
                    CHECK(p[x] < 0);
            }
        }
    }
    // interior path vertices sit exactly at zero
    auto p = curvature(path_graph(5), unit(path_graph(5)));
    CHECK(p[1] == 0);
    CHECK(p[2] == 0);
    CHECK(p[3] == 0);
}
