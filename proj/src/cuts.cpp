#include "ttour/cuts.hpp"

#include <algorithm>

namespace ttour {

NarrowCutFamily narrow_cuts(const Instance& inst, const EdgeVector& x_star) {
  if (inst.num_vertices() > kMaxCutEnumerationVertices) {
    throw SizeLimitExceeded("cuts: enumeration supports at most " + std::to_string(kMaxCutEnumerationVertices) +
                            " vertices");
  }
  if (x_star.size() != inst.num_edges()) {
    throw std::invalid_argument("narrow_cuts: x* does not match instance");
  }
  NarrowCutFamily family;
  for_each_canonical_side(inst.num_vertices(), [&](VertexSet side) {
    Rational load = cut_load(inst, x_star, side);
    if (load >= 2) {
      return;
    }
    Cut cut = cut_edges(inst, side);
    if (!is_t_cut(inst, cut)) {
      throw CertificateViolation("narrow_cuts: narrow cut is not a T-cut, x* violates an even-cut constraint");
    }
    if (load < 1) {
      throw CertificateViolation("narrow_cuts: cut load below 1, x* violates a partition constraint");
    }
    family.cuts.push_back(NarrowCut{std::move(cut), std::move(load)});
  });
  return family;
}

LonelyClassification classify_tree(const Instance& inst, const NarrowCutFamily& family,
                                   std::span<const EdgeIndex> tree) {
  LonelyClassification out;
  out.crossings.reserve(family.cuts.size());
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const VertexSet side = family.cuts[k].cut.side;
    std::vector<EdgeIndex> inside;
    for (const EdgeIndex e : tree) {
      if (inst.crosses(e, side)) {
        inside.push_back(e);
      }
    }
    if (inside.empty()) {
      throw CertificateViolation("classify_tree: spanning tree misses a cut");
    }
    out.crossings.push_back(inside.size());
    if (inside.size() == 1) {
      out.lonely_cuts.push_back(k);
      out.lonely_edge_at.push_back(inside.front());
    }
  }
  out.lonely_edges = out.lonely_edge_at;
  std::sort(out.lonely_edges.begin(), out.lonely_edges.end());
  if (std::adjacent_find(out.lonely_edges.begin(), out.lonely_edges.end()) != out.lonely_edges.end()) {
    throw CertificateViolation("classify_tree: an edge is lonely at two different cuts");
  }
  // A narrow cut meeting S twice never holds two lonely edges of S.
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    if (out.crossings[k] != 2) {
      continue;
    }
    std::size_t lonely_inside = 0;
    for (const EdgeIndex e : tree) {
      if (inst.crosses(e, family.cuts[k].cut.side) &&
          std::binary_search(out.lonely_edges.begin(), out.lonely_edges.end(), e)) {
        ++lonely_inside;
      }
    }
    if (lonely_inside == 2) {
      throw CertificateViolation("classify_tree: narrow cut with |S∩C| = 2 holds two lonely edges");
    }
  }
  return out;
}

std::vector<LonelyClassification> lonely_classification(const Instance& inst, const NarrowCutFamily& family,
                                                        const TreeCombination& combination) {
  std::vector<LonelyClassification> out;
  out.reserve(combination.trees.size());
  for (const WeightedTree& tree : combination.trees) {
    out.push_back(classify_tree(inst, family, tree.edges));
  }
  return out;
}

std::vector<EdgeVector> lonely_vectors(const Instance& inst, const NarrowCutFamily& family,
                                       const TreeCombination& combination,
                                       const std::vector<LonelyClassification>& lonely) {
  std::vector<EdgeVector> out(family.cuts.size(), EdgeVector(inst.num_edges(), 0));
  std::vector<bool> covered(family.cuts.size(), false);
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const LonelyClassification& cls = lonely.at(i);
    for (std::size_t j = 0; j < cls.lonely_cuts.size(); ++j) {
      out[cls.lonely_cuts[j]][cls.lonely_edge_at[j]] += combination.trees[i].weight;
      covered[cls.lonely_cuts[j]] = true;
    }
  }
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    if (!covered[k]) {
      throw CertificateViolation("lonely_vectors: no tree is lonely at a narrow cut");
    }
    const Rational scale = Rational(1) / (2 - family.cuts[k].load);
    for (Rational& value : out[k]) {
      value *= scale;
    }
    if (cost(out[k], family.cuts[k].cut.edges) < 1) {
      throw CertificateViolation("lonely_vectors: v^C(C) < 1");
    }
  }
  return out;
}

} // namespace ttour
