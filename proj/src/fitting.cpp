#include "rescurv/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rescurv/polytope.hpp"
#include "rescurv/resistance.hpp"

namespace rescurv {

namespace {

FitResult run_fit(const Graph& g, const std::vector<double>& target, const FitOptions& opt) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    FitResult res;
    res.weights.assign(m, 1.0);
    if (opt.random_init_seed) {
        std::mt19937_64 rng(*opt.random_init_seed);
        for (auto& w : res.weights) w = 0.5 + static_cast<double>(rng() % 1000) / 1000.0;
    }
    if (n <= 1 || m == 0) {
        res.converged = true;
        return res;
    }
    const double exponent = 1.0 / static_cast<double>(n - 1);
    while (true) {
        auto r = relative_resistances(g, res.weights);
        double resid = 0.0;
        for (int e = 0; e < m; ++e) resid = std::max(resid, std::fabs(r[e] - target[e]));
        res.residual = resid;
        if (opt.record_trace) res.residual_trace.push_back(resid);
        if (resid <= opt.tol) {
            res.converged = true;
            break;
        }
        if (res.iterations >= opt.max_iter) break;
        for (int e = 0; e < m; ++e) res.weights[e] *= std::pow(target[e] / r[e], exponent);
        ++res.iterations;
    }
    res.weights = per_block_normalize(g, std::move(res.weights));
    return res;
}

} // namespace

FitResult fit_weights(const Graph& g, const std::vector<Rat>& target, const FitOptions& opt) {
    if (opt.tol <= 0) throw ParameterError("fit tolerance must be positive");
    if (static_cast<int>(target.size()) != g.edge_count())
        throw ParameterError("fit target length does not match edge count");
    auto rep = membership(g, target, Region::P_interior);
    if (!rep.inside)
        throw ParameterError("fit target is not strictly inside the spanning tree polytope: " +
                             rep.violated);
    std::vector<double> t(target.size());
    for (size_t e = 0; e < target.size(); ++e) t[e] = rat_to_double(target[e]);
    return run_fit(g, t, opt);
}

FitResult fit_weights_numeric(const Graph& g, const std::vector<double>& target,
                              const FitOptions& opt) {
    if (opt.tol <= 0) throw ParameterError("fit tolerance must be positive");
    if (static_cast<int>(target.size()) != g.edge_count())
        throw ParameterError("fit target length does not match edge count");
    return run_fit(g, target, opt);
}

std::vector<double> per_block_normalize(const Graph& g, std::vector<double> c) {
    auto blocks = biconnected_components(g);
    for (const auto& blk : blocks.block_edges) {
        double mx = 0.0;
        for (int e : blk) mx = std::max(mx, c[e]);
        if (mx > 0)
            for (int e : blk) c[e] /= mx;
    }
    return c;
}

namespace {

template <class T>
BirchReport birch_impl(const Graph& g, const std::vector<T>& c1, const std::vector<T>& c2,
                       double tol) {
    check_weights(g, c1);
    check_weights(g, c2);
    auto r1 = relative_resistances(g, c1);
    auto r2 = relative_resistances(g, c2);
    BirchReport rep;
    rep.same_resistances = true;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!ScalarTraits<T>::close(r1[e], r2[e], tol)) rep.same_resistances = false;

    auto blocks = biconnected_components(g);
    rep.per_block_ratio = true;
    for (const auto& blk : blocks.block_edges) {
        T ratio = c1[blk.front()] / c2[blk.front()];
        for (int e : blk)
            if (!ScalarTraits<T>::close(c1[e] / c2[e], ratio, tol)) rep.per_block_ratio = false;
    }
    // The two views coincide as a theorem; in exact arithmetic a mismatch is
    // a bug. Numeric mode reports both flags and leaves the comparison to
    // the caller (tolerances on the two sides are not comparable).
    if (ScalarTraits<T>::exact && rep.same_resistances != rep.per_block_ratio)
        throw InternalError(
            "uniqueness violation: equal relative resistances and per-block weight ratios must "
            "coincide");
    return rep;
}

} // namespace

BirchReport check_birch_uniqueness(const Graph& g, const std::vector<Rat>& c1,
                                   const std::vector<Rat>& c2) {
    return birch_impl<Rat>(g, c1, c2, 0.0);
}

BirchReport check_birch_uniqueness_numeric(const Graph& g, const std::vector<double>& c1,
                                           const std::vector<double>& c2, double tol) {
    return birch_impl<double>(g, c1, c2, tol);
}

} // namespace rescurv
