#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netdopt/criteria.hpp"
#include "netdopt/graph.hpp"

namespace netdopt {

struct PairTerm {
  int i = 0;
  int j = 0;      // i < j
  double q = 0;   // coefficient of x_i x_j
};

// Redundant structure carried next to the folded pair list:
//   objective(x) = edge_coef * sum_{(i,j) in edges} x_i x_j
//                + (sum_i square_weights_i x_i)^2        (if weights present)
// Exact solvers use it for much tighter node bounds; evaluation always goes
// through the pair list.
struct SeparableForm {
  double edge_coef = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> square_weights;
};

/// Quadratic +-1 objective: constant + sum_{i<j} q_ij x_i x_j,
/// with zero-coefficient pairs omitted.
struct QuadObjective {
  int n = 0;
  std::vector<PairTerm> pairs;
  double constant = 0;
  double a_value = 0;
  std::optional<SeparableForm> separable;

  double value(const Design& x) const;
};

/// |sum_i weights_i x_i| <= bound.
struct BalanceConstraint {
  std::vector<int> weights;
  double bound = 0;

  long long weighted_sum(const Design& x) const;
  bool satisfied(const Design& x) const;
};

enum class SolveMethod { brute, branch_bound, local_search };

const char* to_string(SolveMethod m);
std::optional<SolveMethod> parse_solve_method(std::string_view name);

struct SolveOptions {
  std::uint64_t seed = 1;
  int restarts = 20;
  double time_budget_seconds = 600.0;
  int brute_cap = 24;
};

struct SolveReport {
  Design design;
  double objective = 0;
  double lower_bound = 0;
  double upper_bound_val = 0;  // objective of the incumbent
  double gap = 0;              // (ub - lb) / |ub|; 0 once optimality is proven
  SolveMethod method = SolveMethod::brute;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
  std::uint64_t nodes_explored = 0;
  int restarts = 0;
  bool proven_optimal = false;
  bool budget_exceeded = false;
};

std::string solve_report_json(const SolveReport& report);

// Pairwise form of the d-optimality minimization objective:
// q_ij = 2 (a w_ij + m_i m_j), constant sum m_i^2, a = rho/(1-rho) sum m.
QuadObjective build_original_qubo(const Network& net, double rho);

// Edge-only objective sum_{i!=j} w_ij x_i x_j, meant to be paired with a
// balance constraint on the degree-weighted split.
QuadObjective build_modified_objective(const Network& net);

// Inverse standard-normal CDF; rational approximation polished with one
// Newton step against the erf-based CDF. |error| <= 1e-9 on [0.001, 0.999].
double normal_quantile(double alpha);

// Balance bound Phi^{-1}(alpha) * sqrt(sum m_i^2); requires alpha in (0.5, 1).
double calibrate_balance_bound(const Network& net, double alpha);

BalanceConstraint make_balance_constraint(const Network& net, double alpha);

// Valid global lower bound on the objective over the feasible set; cheap
// (no relaxation solve). Shared by local search gap reporting and the
// branch-and-bound root.
double root_lower_bound(const QuadObjective& obj,
                        const std::optional<BalanceConstraint>& balance);

// Exhaustive enumeration (n capped); ties resolved to the lexicographically
// smallest canonical design.
SolveReport solve_brute(const QuadObjective& obj,
                        const std::optional<BalanceConstraint>& balance = {},
                        const SolveOptions& opts = {});

// Depth-first branch and bound; exact when it finishes within budget,
// otherwise returns the incumbent with a positive gap.
SolveReport solve_branch_bound(
    const QuadObjective& obj,
    const std::optional<BalanceConstraint>& balance = {},
    const SolveOptions& opts = {});

// Called with the objective value after every accepted local-search move.
using MoveObserver = std::function<void(double)>;

// Multistart steepest descent over single flips and pair swaps with O(1)
// move deltas; infeasible starts are repaired by greedy flips.
SolveReport solve_local_search(
    const QuadObjective& obj,
    const std::optional<BalanceConstraint>& balance, int restarts,
    std::uint64_t seed, const MoveObserver* observer = nullptr);

// Builds the edge-only objective, calibrates the balance bound from alpha,
// and dispatches to the chosen solver. Independent of rho.
SolveReport solve_modified(const Network& net, double alpha, SolveMethod method,
                           const SolveOptions& opts = {});

// build_original_qubo + chosen solver.
SolveReport solve_original(const Network& net, double rho, SolveMethod method,
                           const SolveOptions& opts = {});

struct CombineResult {
  std::vector<int> signs;  // one factor in {-1,+1} per cluster, signs[0] = +1
  Design design;           // concatenated cluster designs, flipped per sign
  long long value = 0;     // achieved (sum_k c_k s_k)^2
};

// Optimal sign per cluster for the degree-weighted imbalances s_k:
// exact by enumeration for K <= 20, by reachable-sum DP above that.
std::pair<std::vector<int>, long long> combine_signs(
    const std::vector<long long>& s);

CombineResult combine_clusters(const std::vector<Network>& clusters,
                               const std::vector<Design>& designs);

}  // namespace netdopt
