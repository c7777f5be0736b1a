#pragma once

#include <optional>
#include <string>

#include "wrp/engine.hpp"
#include "wrp/instance.hpp"

namespace wrp {

//! Parses the line-oriented instance format:
//!
//!   graph undirected|directed
//!   edge <u> <v> [cap=<rational>] [w=<rational>]   (repeats make parallels)
//!   route <s> <t>
//!   waypoints <w1> ... <wk>                        (optional, may be empty)
//!   demands <d0> ... <dk>                          (optional, default all 1)
//!   bounds <L0> ... <Lk>                           (optional)
//!
//! '#' starts a comment.  Node names are bare tokens, interned in order of
//! first appearance.  Errors are std::runtime_error prefixed "line N:";
//! instance-level violations name the offending field.
WaypointInstance parse_instance(const std::string& text);

//! Canonical inverse of parse_instance: sections in the order above,
//! cap=/w= only when not 1, demands only when not all 1.  Re-parsing the
//! output reproduces the instance (by node name and edge id), and
//! serializing again is byte-identical.
std::string serialize_instance(const WaypointInstance& instance);

//! GraphML subset: <node id=...>, <edge source=... target=...>, numeric
//! <data> values for keys declared with attr.name "capacity" or "weight"
//! (missing ones default to 1).  Produces an undirected network; parallel
//! edges are preserved.  Throws std::runtime_error on malformed markup,
//! duplicate node ids, unknown endpoints, or a non-numeric value (the
//! message names the key).
Network parse_graphml_topology(const std::string& text);

//! Canonical machine-readable record of a solve run: one JSON object with
//! fields status, cost {exact, approx}, segments, usage, solver, warnings.
//! Byte-stable for a fixed report.
std::string emit_result(const SolveReport& report, const WaypointInstance& instance);

//! Reads a walk back out of emit_result output, resolving node names
//! against `instance`.  Returns nullopt when the record carries no walk.
//! Throws std::runtime_error on malformed records or unknown names.
std::optional<WalkSolution> parse_result_walk(const std::string& text,
                                              const WaypointInstance& instance);

}  // namespace wrp
