#pragma once

#include "ttour/graph.hpp"

#include <span>
#include <vector>

namespace ttour {

struct WeightedTree {
  std::vector<EdgeIndex> edges;  // sorted
  Rational weight;
};

/// Spanning trees with Σ p_S = 1, p_S > 0 and Σ p_S χ^S ≤ x*.
struct TreeCombination {
  std::vector<WeightedTree> trees;
  /// Σ p_S χ^S differs from x* on at least one edge.
  bool strictly_dominated = false;
  std::size_t pricing_rounds = 0;
};

/// Per-tree split S = I_S ∪ J_S where I_S is the T-join inside S.
struct TreeStructure {
  std::vector<EdgeIndex> tree;
  std::vector<EdgeIndex> t_join;      // I_S
  std::vector<EdgeIndex> complement;  // J_S = S ∖ I_S
};

struct AggregateVectors {
  EdgeVector i_p;
  EdgeVector j_p;
  EdgeVector l_p;
};

/// Column generation: the master maximizes Σ p_S subject to Σ p_S χ^S ≤ x*
/// over a growing pool, and pricing is a minimum spanning tree under the row
/// prices. Stops once Σ p_S ≥ 1 and rescales to a convex combination.
/// Throws CertificateViolation if x* is outside the connector polyhedron.
TreeCombination decompose(const Instance& inst, const EdgeVector& x_star);

/// Kruskal with exact weights, ties broken by edge index.
std::vector<EdgeIndex> minimum_spanning_tree(const Instance& inst, const EdgeVector& weights);

/// I_S = tree edges whose fundamental cut is a T-cut.
TreeStructure tree_structure(const Instance& inst, std::span<const EdgeIndex> tree);

/// I_p, J_p and L_p from the per-tree sets; `lonely_edges[i]` is L_S for tree i.
AggregateVectors aggregate_vectors(const Instance& inst, const TreeCombination& combination,
                                   const std::vector<TreeStructure>& structures,
                                   const std::vector<std::vector<EdgeIndex>>& lonely_edges);

/// Σ p_S χ^S.
EdgeVector tree_average(const Instance& inst, const TreeCombination& combination);

} // namespace ttour
