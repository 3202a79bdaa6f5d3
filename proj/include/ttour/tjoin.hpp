#pragma once

#include "ttour/graph.hpp"

#include <optional>
#include <vector>

namespace ttour {

/// Bound on |T'| for the subset dynamic program behind min_join.
inline constexpr std::size_t kMaxJoinTargets = 20;

struct JoinResult {
  std::vector<EdgeIndex> edges;  // sorted, a set
  Rational cost;                 // under the costs passed in
};

/// Cheapest T'-join under nonnegative `costs` (no metric assumption).
///
/// Shortest paths between the targets, an exact minimum-weight perfect
/// matching on the targets by dynamic programming over subsets, then the
/// symmetric difference of the matched paths. Edges used an even number of
/// times cancel, which keeps parity and never raises the cost.
JoinResult min_join(const Instance& inst, const EdgeVector& costs, VertexSet targets);

/// A cut δ(U) with |U ∩ T'| odd and y(δ(U)) < 1, or nullopt if y lies in the
/// T'-join polyhedron. Exhaustive over canonical sides; the first violating
/// side in increasing order is returned.
std::optional<Cut> join_polyhedron_violation(const Instance& inst, const EdgeVector& y, VertexSet targets);

} // namespace ttour
