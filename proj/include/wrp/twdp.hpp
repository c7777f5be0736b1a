#pragma once

#include <optional>
#include <stdexcept>

#include "wrp/instance.hpp"
#include "wrp/tree_decomposition.hpp"

namespace wrp {

struct TwDpOptions {
  //! Hard cap on (width+1)*(segments); beyond it the solver refuses and
  //! the caller should fall back to the oracle.
  int state_budget = 16;
  //! Cap on table operations across the whole run.  The parity bits admit
  //! at most 2^state_budget keys, but the per-edge claims that ride along
  //! in dense bags can multiply tables far beyond that; when actual work
  //! passes this cap the solver throws StateSpaceOverflow instead of
  //! grinding on.
  long long work_budget = 16'000'000;
};

//! Thrown when the table outgrows work_budget mid-run; callers that picked
//! the solver automatically should fall back to exhaustive search.
struct StateSpaceOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Shortest waypoint routing with demand changes on a bounded-width nice
//! decomposition of an undirected network.
//!
//! The table is indexed by parity signatures: per segment, the parity of
//! the chosen edge set's degree at each bag node, plus the segment sets
//! claimed on each bag-internal edge instance.  A segment's edge set must
//! end up odd exactly at its two route nodes; such a set always contains a
//! simple route-to-route path, and whatever else it contains decomposes
//! into cycles that can only be dropped (weights are non-negative), so the
//! parity optimum and the walk optimum coincide.  Representative edge sets
//! of minimum cost ride along for reconstruction.
//!
//! Returns nullopt when infeasible.  Throws std::invalid_argument on
//! directed networks, on length bounds (not expressible in this table),
//! and when the state budget is exceeded ("state space too large");
//! throws StateSpaceOverflow when the work budget runs out mid-run.
std::optional<WalkSolution> solve_tw_dp(const WaypointInstance& instance,
                                        const NiceDecomposition& nice,
                                        const TwDpOptions& options = {});

}  // namespace wrp
