#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rescurv/graph.hpp"
#include "rescurv/lp.hpp"
#include "rescurv/rational.hpp"

namespace rescurv {

/// One affine constraint sum_{e in mask} x_e <= bound over R^E. Every
/// constraint family used here has 0/1 coefficients, so an edge bitmask is a
/// complete representation.
struct Constraint {
    enum class Kind {
        tree_subset,   // aux = edge subset A (eager system)
        vertex_subset, // aux = vertex subset U, edges = E(U) (oracle system)
        degree,        // aux = vertex id
        odd_set,       // aux = vertex subset U of odd size
        nonneg,        // aux = edge id; reads x_e >= 0
    };
    Kind kind;
    uint64_t aux = 0;
    uint64_t edge_mask = 0;
    Rat bound;
    bool equality_implied = false;  // holds with equality on every point of P(G)

    std::string describe() const;
};

struct HyperplaneSystem {
    int num_edges = 0;
    std::vector<Constraint> rows;
};

/// Eager hyperplane description of the spanning tree polytope: one upper
/// bound per nonempty A subseteq E plus per-edge nonnegativity. Capped at
/// 2^max_eager_constraint_edges rows.
HyperplaneSystem tree_polytope_constraints(const Graph& g, const Caps& caps = {});

/// Doubled matching polytope: nonnegativity, per-vertex degree bounds and
/// odd-set bounds.
HyperplaneSystem doubled_matching_constraints(const Graph& g, const Caps& caps = {});

enum class Region { P, P_interior, TwoM, Theta };

struct MembershipReport {
    bool inside = false;
    std::string violated;  // description of one violated constraint
};

struct InteriorPointResult {
    bool found = false;
    Rat t_star;
    std::vector<Rat> x;
};

/// Membership machinery for P(G), 2M(G) and Theta(G) that stays total when
/// eager generation is out of reach. The tree side uses the equivalent
/// connected-vertex-subset family: for U subseteq V with G[U] connected,
///   sum_{e in E(U)} x_e <= |U| - 1,
/// together with x >= 0; summed over the components of (V, A) these dominate
/// every subset constraint, and the family contains all facets.
class PolytopeOracle {
public:
    explicit PolytopeOracle(const Graph& g);

    const Graph& graph() const { return g_; }
    const std::vector<Constraint>& tree_rows() const { return tree_rows_; }
    const std::vector<Constraint>& degree_rows() const { return degree_rows_; }
    const std::vector<Constraint>& odd_rows() const { return odd_rows_; }

    MembershipReport membership(const std::vector<Rat>& x, Region which) const;

    /// Is the integer vector inside k*Theta(G)?
    bool integer_point_in_scaled_theta(const std::vector<int>& x, int k) const;

    /// Exact LP for a point of P(G)-interior intersected with 2M(G),
    /// maximizing the minimum tree-side slack; found iff that optimum is
    /// positive. Constraints are generated lazily.
    InteriorPointResult find_theta_interior_point(const Caps& caps = {}) const;

private:
    Graph g_;
    std::vector<Constraint> tree_rows_;   // connected-U family, equality rows included
    std::vector<Constraint> degree_rows_;
    std::vector<Constraint> odd_rows_;
};

MembershipReport membership(const Graph& g, const std::vector<Rat>& x, Region which);

/// Does conv(e_T | T in F) meet the relative interior of P(G)? Decided by an
/// exact LP maximizing the minimal strict-constraint slack over the hull;
/// the optimum is positive exactly for non-separable families.
bool non_separable(const Graph& g, const SpanningTreeSet& trees, const std::vector<long>& family,
                   Rat* slack_out = nullptr, const Caps& caps = {});

struct IntegerPointsResult {
    int k = 1;
    std::vector<std::vector<int>> points;  // canonical order
};

/// Integer points of k*Theta(G) by pruned search over 0..k edge values with
/// exact membership verification of each candidate.
IntegerPointsResult theta_integer_points(const Graph& g, int k, const Caps& caps = {});

/// Does Theta(G) fill all of P(G)? True exactly when every spanning tree
/// indicator lies in 2M(G). Requires biconnected input.
bool theta_equals_P(const Graph& g, const Caps& caps = {});

struct HamPathBoundReport {
    long path_count = 0;
    int independent_count = 0;  // largest affinely independent subfamily
    int required = 0;           // |E| - #biconnected components
    bool rn_implied = false;
};

/// Affine-rank certificate: enough independent Hamiltonian paths force the
/// hull of their indicators to fill the affine hull of P(G) and hence meet
/// its interior.
HamPathBoundReport independent_hamiltonian_path_bound(const Graph& g);

} // namespace rescurv
