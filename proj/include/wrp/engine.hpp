#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wrp/instance.hpp"
#include "wrp/oracle.hpp"

namespace wrp {

enum class SolveStatus { kOptimal, kInfeasible, kBudgetExceeded };

struct SolvePolicy {
  //! Empty string = automatic dispatch.  Otherwise one of "direct",
  //! "tree", "dag", "suurballe", "flow", "twdp", "oracle": run exactly
  //! that solver and surface its dispatch errors.
  std::string force;
  //! Budgets for the oracle when it ends up running.
  OracleLimits oracle_budget{};
  //! Cap on (width+1)*(segments) for the width-bounded table; also sizes
  //! the decomposition width the automatic dispatch is willing to try.
  int state_budget = 16;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  //! Present on kOptimal; on kBudgetExceeded it carries the best walk the
  //! oracle saw before stopping, if any.
  std::optional<WalkSolution> solution;
  std::string solver_used;
  //! Hardness-regime tags, in a fixed order, attached whenever the oracle
  //! has to run: "hard:directed-waypoint", "hard:demand-change",
  //! "hard:distance-bounds", "hard:many-waypoints".
  std::vector<std::string> warnings;
};

//! Routes the instance to the strongest applicable solver: waypoint-free
//! instances directly, trees and DAGs to the structured solvers, undirected
//! unit-demand single-waypoint instances to the disjoint-path pipeline,
//! narrow undirected networks to the width-bounded table, everything else
//! to the exhaustive oracle with the warnings above.  Every returned
//! solution has passed validate_walk.
SolveReport solve(const WaypointInstance& instance, const SolvePolicy& policy = {});

}  // namespace wrp
