#pragma once

#include "ttour/cuts.hpp"
#include "ttour/decompose.hpp"
#include "ttour/graph.hpp"
#include "ttour/lp.hpp"
#include "ttour/tjoin.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace ttour {

enum class Algorithm {
  kBestOfManyChristofides,
  kLonelyEdgeDeletion,
};

std::string_view algorithm_name(Algorithm algorithm);

/// T-tour: odd(edges) = T and (V, edges) connected.
struct Tour {
  EdgeMultiset edges;
  Rational cost;
  Algorithm algorithm = Algorithm::kBestOfManyChristofides;
  /// Index of the tree in the combination that produced the tour.
  std::size_t tree = 0;
};

struct BomcCandidate {
  std::size_t tree = 0;
  VertexSet targets;  // odd(S) △ T
  JoinResult join;    // J*_S, cost under c
  EdgeMultiset tour;
  Rational cost;
};

struct BomcResult {
  std::vector<BomcCandidate> candidates;
  Tour best;
};

struct DeletionCandidate {
  std::size_t tree = 0;
  std::vector<EdgeIndex> forest;  // F_S = S ∖ L_S
  VertexSet targets;              // odd(F_S) △ T
  EdgeVector modified_cost;       // c^S
  JoinResult join;                // J*_S, cost under c^S
  Rational join_cost;             // c(J*_S)
  std::vector<EdgeIndex> reconnection;  // R_S
  Rational reconnection_cost;           // c(R_S)
  EdgeMultiset tour;                    // F_S + J*_S + 2 R_S
  Rational cost;
};

struct DeletionResult {
  std::vector<DeletionCandidate> candidates;
  Tour best;
};

/// Everything the combined algorithm computes, kept for certification.
struct PipelineResult {
  LpSolution lp;
  TreeCombination combination;
  std::vector<TreeStructure> structures;
  NarrowCutFamily family;
  std::vector<LonelyClassification> lonely;
  std::vector<EdgeVector> lonely_vectors;
  AggregateVectors aggregates;
  BomcResult bomc;
  DeletionResult deletion;
  Tour best;
};

bool is_t_tour(const Instance& inst, const EdgeMultiset& edges);

/// c^S(e) = c(e) + 2·(Σ_{C∈𝓛_S, e∈C} c(S∩C) − max_{C∈𝓛_S, e∈C} c(S∩C)), max ∅ = 0.
EdgeVector modified_cost(const Instance& inst, std::span<const EdgeIndex> tree, const NarrowCutFamily& family,
                         const LonelyClassification& lonely);

/// Cheapest edge set R with (V, F ∪ R) connected: Kruskal on the graph with
/// the components of F contracted, original costs, ties by edge index.
std::vector<EdgeIndex> reconnect(const Instance& inst, std::span<const EdgeIndex> forest);
std::vector<EdgeIndex> reconnect(const Instance& inst, const EdgeMultiset& forest);

/// For every tree: J*_S = cheapest (odd(S) △ T)-join under c, tour S + J*_S.
/// Returns the cheapest tour; ties go to the earlier tree.
BomcResult best_of_many_christofides(const Instance& inst, const TreeCombination& combination);

/// For every tree: drop the lonely edges, join odd(F_S) △ T under c^S,
/// reconnect with doubled R_S. Ranked by actual cost c.
DeletionResult lonely_edge_deletion(const Instance& inst, const TreeCombination& combination,
                                    const NarrowCutFamily& family,
                                    const std::vector<LonelyClassification>& lonely);

/// LP, decomposition, narrow cuts, both algorithms; the cheaper tour wins and
/// ties go to Best-of-Many-Christofides.
PipelineResult combined(const Instance& inst);

} // namespace ttour
