#pragma once

#include "ttour/decompose.hpp"
#include "ttour/graph.hpp"

#include <span>
#include <vector>

namespace ttour {

inline constexpr std::size_t kMaxCutEnumerationVertices = 20;

struct NarrowCut {
  Cut cut;
  Rational load;  // x*(C)
};

/// Every cut with x*(C) < 2, in canonical-side order.
struct NarrowCutFamily {
  std::vector<NarrowCut> cuts;
};

/// Lonely cuts 𝓛_S and lonely edges L_S of one tree.
struct LonelyClassification {
  /// |S ∩ C| for every narrow cut, parallel to NarrowCutFamily::cuts.
  std::vector<std::size_t> crossings;
  /// Indices of the lonely cuts, increasing.
  std::vector<std::size_t> lonely_cuts;
  /// The unique edge of S ∩ C, parallel to lonely_cuts.
  std::vector<EdgeIndex> lonely_edge_at;
  /// L_S, sorted.
  std::vector<EdgeIndex> lonely_edges;

  bool is_lonely(std::size_t cut) const { return crossings.at(cut) == 1; }
};

/// Exhaustive over the 2^{n−1} − 1 canonical sides. Throws
/// CertificateViolation on a narrow cut that is not a T-cut or has load < 1,
/// both of which contradict LP feasibility.
NarrowCutFamily narrow_cuts(const Instance& inst, const EdgeVector& x_star);

LonelyClassification classify_tree(const Instance& inst, const NarrowCutFamily& family,
                                   std::span<const EdgeIndex> tree);

std::vector<LonelyClassification> lonely_classification(const Instance& inst, const NarrowCutFamily& family,
                                                        const TreeCombination& combination);

/// v^C = 1/(2 − x*(C)) · Σ_{S : C ∈ 𝓛_S} p_S χ^{S∩C}, one per narrow cut.
/// Throws CertificateViolation if no tree is lonely at some narrow cut or if
/// v^C(C) < 1.
std::vector<EdgeVector> lonely_vectors(const Instance& inst, const NarrowCutFamily& family,
                                       const TreeCombination& combination,
                                       const std::vector<LonelyClassification>& lonely);

} // namespace ttour
