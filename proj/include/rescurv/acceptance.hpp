#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rescurv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The full verification suite over the built-in corpus: exact Foster sums,
/// known curvature values, the classification table, polytope and
/// integer-point cross-checks, fitting round trips, transform update rules,
/// and the capacity checks. Every tolerance is pinned here.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_done = nullptr);

} // namespace rescurv
