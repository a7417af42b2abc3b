#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/matrix.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

/// tau over all vertex subsets (indexed by bitmask), together with the data
/// it was computed from. Construction verifies the structural invariants:
/// tau_empty = 0, singletons 1/2, tau_V = 1, monotone, range [0,1].
struct CapacityTable {
    int n = 0;
    std::vector<Rat> tau;  // size 2^n
    std::vector<Rat> weights_normalized;

    const Rat& of(uint64_t subset_mask) const { return tau[subset_mask]; }
};

/// tau_U = 1/2 + 1/2 (sum of entries of Omega[U]^{-1})^{-1} for |U| >= 2,
/// with the conventions tau_empty = 0, tau_singleton = 1/2. Weights must be
/// normalized.
Rat resistance_capacity(const Graph& g, const std::vector<Rat>& c_normalized, uint64_t u_mask);

CapacityTable full_table(const Graph& g, const std::vector<Rat>& c_normalized, const Caps& caps = {});

struct SubmodularReport {
    bool submodular = true;
    Rat min_slack;       // over incomparable pairs; 0 when none exist
    uint64_t worst_a = 0;
    uint64_t worst_b = 0;
};

/// Checks f(A) + f(B) >= f(A u B) + f(A n B) over all unordered incomparable
/// pairs (nested pairs hold with equality identically) and reports the
/// minimum slack with its argmin pair.
SubmodularReport is_submodular(const CapacityTable& table);

struct RecoveredGraph {
    Graph graph;
    std::vector<Rat> weights;
};

/// Rebuilds the weighted graph from the pair values of tau: resistances are
/// omega_uv = 4 tau_uv - 2, then K = Omega^{-1} and L = -2K + 2(K1)(K1)^T.
/// Inconsistent pair data (anything that fails to produce a connected
/// positively-weighted graph reproducing the input) raises ParameterError.
RecoveredGraph recover_graph(int n, const std::vector<Rat>& pair_tau_by_edge_order,
                             const std::vector<std::pair<int, int>>& pairs);

/// Convenience: recover from a full table's pair entries.
RecoveredGraph recover_graph(const CapacityTable& table);

struct ConjectureSample {
    std::vector<Rat> weights_normalized;
    bool submodular = false;
    Rat min_curvature;
    bool curvature_nonnegative = false;
};

struct ConjectureReport {
    long samples = 0;
    long submodular_and_nonneg = 0;
    long submodular_and_neg = 0;
    long nonsub_and_nonneg = 0;  // would contradict the proved direction
    long nonsub_and_neg = 0;
    std::optional<ConjectureSample> counterexample;  // submodular with negative curvature
    std::optional<ConjectureSample> theorem_violation;  // nonnegative curvature, not submodular
};

/// Samples random integer weights in [1,100], normalizes them exactly, and
/// tabulates submodularity of tau against the sign of the curvature. A
/// sample with p >= 0 failing submodularity contradicts a proved statement
/// and is reported as a violation; a submodular sample with negative
/// curvature is a counterexample to the open converse.
ConjectureReport conjecture_search(const Graph& g, long samples, uint64_t seed,
                                   const Caps& caps = {});

} // namespace rescurv
