#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

struct FitResult {
    std::vector<double> weights;  // per-block normalized: max weight in each block is 1
    long iterations = 0;
    double residual = 0.0;  // max_e |r_e(c) - target_e|
    bool converged = false;
    std::vector<double> residual_trace;  // filled when requested
};

struct FitOptions {
    double tol = 1e-9;
    long max_iter = 100000;
    bool record_trace = false;
    // All-ones start by default (deterministic); a seed switches to random
    // positive initial weights.
    std::optional<uint64_t> random_init_seed;
};

/// Inverts the weights -> relative-resistances map by multiplicative
/// scaling: c_e <- c_e * (target_e / r_e(c))^(1/(|V|-1)) alternated with
/// recomputation of r(c). The target must lie strictly inside the spanning
/// tree polytope (checked exactly); reaching max_iter returns
/// converged=false rather than throwing.
FitResult fit_weights(const Graph& g, const std::vector<Rat>& target, const FitOptions& opt = {});

/// Float-target variant used on marginals that are already double-valued;
/// skips the exact interior check (the caller vouches for the target).
FitResult fit_weights_numeric(const Graph& g, const std::vector<double>& target,
                              const FitOptions& opt = {});

struct BirchReport {
    bool same_resistances = false;
    bool per_block_ratio = false;
    /// The two views must agree; a mismatch is an internal error and is
    /// thrown, so same_resistances is the operation's verdict.
    bool equal() const { return same_resistances; }
};

/// Do c1 and c2 induce the same relative resistances? Verifies both sides of
/// the uniqueness statement: equal resistance vectors exactly when the
/// weight ratio is constant on every biconnected component.
BirchReport check_birch_uniqueness(const Graph& g, const std::vector<Rat>& c1,
                                   const std::vector<Rat>& c2);
BirchReport check_birch_uniqueness_numeric(const Graph& g, const std::vector<double>& c1,
                                           const std::vector<double>& c2, double tol = 1e-10);

/// Rescales so the largest weight in each biconnected component equals 1;
/// the canonical representative among weight vectors with equal relative
/// resistances.
std::vector<double> per_block_normalize(const Graph& g, std::vector<double> c);

} // namespace rescurv
