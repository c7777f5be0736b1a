#include "wrp/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "wrp/classify.hpp"
#include "wrp/single_waypoint.hpp"
#include "wrp/structured.hpp"
#include "wrp/tree_decomposition.hpp"
#include "wrp/twdp.hpp"

namespace wrp {

namespace {

SolveReport finish(const WaypointInstance& instance, SolveReport report) {
  if (report.solution) {
    ValidationReport check = validate_walk(instance, *report.solution);
    if (!check.ok)
      throw std::logic_error(report.solver_used + " returned an invalid walk: " +
                             check.violations.front());
  }
  return report;
}

SolveReport from_optional(const WaypointInstance& instance,
                          std::optional<WalkSolution> solution,
                          std::string solver) {
  SolveReport report;
  report.solver_used = std::move(solver);
  if (solution) {
    report.status = SolveStatus::kOptimal;
    report.solution = std::move(solution);
  }
  return finish(instance, std::move(report));
}

//! Waypoint-free instances reduce to one capacity-filtered shortest path,
//! on any network shape.
SolveReport solve_direct(const WaypointInstance& instance) {
  std::optional<WalkSegment> segment = solve_single_segment(
      instance.network, instance.source, instance.target, instance.demands[0]);
  if (!segment) return from_optional(instance, std::nullopt, "direct");
  WalkSolution solution;
  solution.segments.push_back(std::move(*segment));
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(instance.network, solution);
  if (instance.bounds && solution.total_cost > (*instance.bounds)[0])
    return from_optional(instance, std::nullopt, "direct");
  return from_optional(instance, std::move(solution), "direct");
}

//! The widest decomposition the state budget leaves room for, or nullopt.
std::optional<NiceDecomposition> budgeted_decomposition(
    const WaypointInstance& instance, int state_budget) {
  int segments = instance.segment_count();
  if (segments > 16) return std::nullopt;
  // 60 is the parity table's own hard ceiling on signature bits.
  int max_width = std::min(state_budget, 60) / segments - 1;
  if (max_width < 1) return std::nullopt;
  std::optional<TreeDecomposition> decomposition =
      decompose(instance.network, max_width);
  if (!decomposition) return std::nullopt;
  return make_nice(*decomposition, instance.network);
}

SolveReport solve_via_oracle(const WaypointInstance& instance,
                             const SolvePolicy& policy,
                             std::vector<std::string> warnings) {
  if (instance.network.node_count() > policy.oracle_budget.max_nodes) {
    SolveReport report;
    report.status = SolveStatus::kBudgetExceeded;
    report.solver_used = "oracle";
    report.warnings = std::move(warnings);
    report.warnings.push_back(
        "network has " + std::to_string(instance.network.node_count()) +
        " nodes, over the exhaustive-search limit of " +
        std::to_string(policy.oracle_budget.max_nodes));
    return report;
  }
  OracleResult result = solve_exhaustive(instance, policy.oracle_budget);
  SolveReport report;
  report.solver_used = "oracle";
  report.warnings = std::move(warnings);
  switch (result.status) {
    case OracleStatus::kOptimal:
      report.status = SolveStatus::kOptimal;
      report.solution = std::move(result.solution);
      break;
    case OracleStatus::kInfeasible:
      report.status = SolveStatus::kInfeasible;
      break;
    case OracleStatus::kBudgetExceeded:
      report.status = SolveStatus::kBudgetExceeded;
      report.solution = std::move(result.solution);
      break;
  }
  return finish(instance, std::move(report));
}

//! The fixed-order hardness-regime tags for instances only the oracle
//! takes.  Each names the feature that puts the instance in a regime with
//! no known polynomial solver.
std::vector<std::string> hardness_tags(const WaypointInstance& instance) {
  std::vector<std::string> tags;
  const bool directed = instance.network.directed();
  const int k = static_cast<int>(instance.waypoints.size());
  if (directed && k >= 1) tags.push_back("hard:directed-waypoint");
  bool demand_change = false;
  for (const Rational& d : instance.demands)
    demand_change = demand_change || d != instance.demands[0];
  if (!directed && demand_change) tags.push_back("hard:demand-change");
  if (!directed && instance.bounds) tags.push_back("hard:distance-bounds");
  if (k >= 2) tags.push_back("hard:many-waypoints");
  return tags;
}

bool unit_demands(const WaypointInstance& instance) {
  return std::all_of(instance.demands.begin(), instance.demands.end(),
                     [](const Rational& d) { return d == Rational(1); });
}

SolveReport solve_forced(const WaypointInstance& instance, const SolvePolicy& policy) {
  const std::string& name = policy.force;
  if (name == "direct") {
    if (!instance.waypoints.empty())
      throw std::invalid_argument("direct solver handles waypoint-free instances only");
    return solve_direct(instance);
  }
  if (name == "tree") return from_optional(instance, solve_tree(instance), "tree");
  if (name == "dag") return from_optional(instance, solve_dag(instance), "dag");
  if (name == "suurballe")
    return from_optional(
        instance, solve_single_waypoint(instance, SingleWaypointMethod::kSuurballe),
        "suurballe");
  if (name == "flow")
    return from_optional(
        instance, solve_single_waypoint(instance, SingleWaypointMethod::kFlow),
        "flow");
  if (name == "twdp") {
    std::optional<NiceDecomposition> nice =
        budgeted_decomposition(instance, policy.state_budget);
    if (!nice)
      throw std::invalid_argument(
          "no tree decomposition fits the state budget of " +
          std::to_string(policy.state_budget));
    TwDpOptions options;
    options.state_budget = policy.state_budget;
    try {
      return from_optional(instance, solve_tw_dp(instance, *nice, options),
                           "twdp");
    } catch (const StateSpaceOverflow& overflow) {
      SolveReport report;
      report.status = SolveStatus::kBudgetExceeded;
      report.solver_used = "twdp";
      report.warnings.push_back(overflow.what());
      return report;
    }
  }
  if (name == "oracle")
    return solve_via_oracle(instance, policy, hardness_tags(instance));
  throw std::invalid_argument("unknown solver: " + name);
}

}  // namespace

SolveReport solve(const WaypointInstance& instance, const SolvePolicy& policy) {
  if (!policy.force.empty()) return solve_forced(instance, policy);

  if (instance.waypoints.empty()) return solve_direct(instance);
  if (underlying_is_tree(instance.network))
    return from_optional(instance, solve_tree(instance), "tree");
  if (instance.network.directed() && topological_order(instance.network))
    return from_optional(instance, solve_dag(instance), "dag");

  if (!instance.network.directed() && !instance.bounds) {
    if (instance.waypoints.size() == 1 && unit_demands(instance))
      return from_optional(
          instance, solve_single_waypoint(instance, SingleWaypointMethod::kSuurballe),
          "suurballe");
    std::optional<NiceDecomposition> nice =
        budgeted_decomposition(instance, policy.state_budget);
    if (nice) {
      TwDpOptions options;
      options.state_budget = policy.state_budget;
      try {
        return from_optional(instance, solve_tw_dp(instance, *nice, options),
                             "twdp");
      } catch (const StateSpaceOverflow&) {
        // The parity budget fit but the per-edge claims blew up mid-run;
        // exhaustive search is the honest fallback.
        std::vector<std::string> warnings = hardness_tags(instance);
        warnings.push_back("width-bounded table overflowed; fell back to exhaustive search");
        return solve_via_oracle(instance, policy, std::move(warnings));
      }
    }
  }

  return solve_via_oracle(instance, policy, hardness_tags(instance));
}

}  // namespace wrp
