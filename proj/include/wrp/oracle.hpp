#pragma once

#include <optional>

#include "wrp/instance.hpp"

namespace wrp {

//! Budgets for the exhaustive search.  The node cap is a refusal limit:
//! instances above it are rejected up front rather than searched badly.
struct OracleLimits {
  int max_nodes = 12;
  long long max_total_steps = 20'000'000;
  double time_budget_seconds = 10.0;
};

enum class OracleStatus { kOptimal, kInfeasible, kBudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  //! Present when status is kOptimal; on kBudgetExceeded it carries the
  //! best walk found before the budget ran out, if any.
  std::optional<WalkSolution> solution;
  long long steps_used = 0;
};

//! Depth-first search over segment-wise simple paths with a shared residual
//! capacity ledger, pruned by an admissible lower bound (capacity-ignoring
//! shortest distances of the remaining segments).  Returns the exact
//! optimum, a proof of infeasibility, or budget_exceeded -- never a wrong
//! verdict.  Deterministic: edges are explored in instance-id order.
//! Throws std::invalid_argument when the network exceeds limits.max_nodes.
OracleResult solve_exhaustive(const WaypointInstance& instance,
                              const OracleLimits& limits = {});

enum class Feasibility { kYes, kNo, kBudgetExceeded };

struct FeasibilityResult {
  Feasibility status = Feasibility::kNo;
  std::optional<WalkSolution> witness;
  long long steps_used = 0;
};

//! Same search, stopping at the first capacity- and bound-respecting walk.
FeasibilityResult feasible_exhaustive(const WaypointInstance& instance,
                                      const OracleLimits& limits = {});

}  // namespace wrp
