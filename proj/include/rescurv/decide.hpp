#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rescurv/fitting.hpp"
#include "rescurv/graph.hpp"
#include "rescurv/lp.hpp"
#include "rescurv/rational.hpp"
#include "rescurv/resistance.hpp"

namespace rescurv {

enum class RnClass { RP, SRN, NOT_RN };

std::string to_string(RnClass c);

/// Outcome of one spanning-tree-distribution LP:
///   maximize t  s.t.  mu_T >= t for all T,  sum mu = 1,
///                     expected tree-degree at v <= 2 (or 2 - t in strict mode).
/// feasible is t* > 0; the witness distribution then has every probability
/// >= t* and expected degrees within the bound.
struct LpDecision {
    LpStatus status = LpStatus::infeasible;
    std::optional<Rat> t_star;  // empty when the LP is infeasible
    TreeDistribution mu;        // valid when t* > 0
    std::vector<Rat> dual;      // multipliers: [0] distribution row, then one per vertex
    bool feasible = false;      // t* > 0
};

LpDecision decide_rn(const Graph& g, const SpanningTreeSet& trees, const Caps& caps = {});
LpDecision decide_rp(const Graph& g, const SpanningTreeSet& trees, const Caps& caps = {});

/// Validates a stored dual certificate for the strict (RP) program: a
/// dual-feasible vector with objective value <= 0 proves no distribution has
/// all expected degrees strictly below 2.
bool verify_not_rp_certificate(const Graph& g, const SpanningTreeSet& trees,
                               const std::vector<Rat>& dual);

struct Verdict {
    RnClass cls = RnClass::NOT_RN;
    std::optional<Rat> t_star;          // of the program that decided the class
    std::optional<Rat> t_star_rn;       // RN program optimum (empty if infeasible)
    std::optional<Rat> t_star_rp;       // RP program optimum
    TreeDistribution witness;           // present iff RN
    std::vector<Rat> witness_marginals; // edge marginals of the witness
    std::vector<Rat> not_rp_certificate;  // dual certificate when SRN
    bool near_perfect_matching = false;
    bool one_tough = false;
    long tree_count = 0;
};

/// Full classification with consistency flags. RP verdicts must be 1-tough
/// and RN verdicts must have a (near-)perfect matching; violations throw
/// InternalError.
Verdict classify(const Graph& g, const Caps& caps = {});

struct WitnessWeightsResult {
    FitResult fit;
    std::vector<double> curvature;
    double min_curvature = 0.0;
};

/// Turns a positive witness distribution into concrete edge weights by
/// fitting its marginals; the achieved curvature must clear -eps.
WitnessWeightsResult witness_weights(const Graph& g, const SpanningTreeSet& trees,
                                     const TreeDistribution& mu, double eps = 1e-6,
                                     const FitOptions& opt = {});

} // namespace rescurv
