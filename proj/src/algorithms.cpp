#include "ttour/algorithms.hpp"

#include <algorithm>
#include <numeric>

namespace ttour {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
  case Algorithm::kBestOfManyChristofides:
    return "bomc";
  case Algorithm::kLonelyEdgeDeletion:
    return "delete";
  }
  return "unknown";
}

bool is_t_tour(const Instance& inst, const EdgeMultiset& edges) {
  return odd_vertices(inst, edges) == inst.terminals() && is_connected(inst, edges);
}

namespace {

void require_tour(const Instance& inst, const EdgeMultiset& edges, const char* where) {
  if (odd_vertices(inst, edges) != inst.terminals()) {
    throw CertificateViolation(std::string(where) + ": candidate has odd(F) != T");
  }
  if (!is_connected(inst, edges)) {
    throw CertificateViolation(std::string(where) + ": candidate is disconnected");
  }
}

} // namespace

EdgeVector modified_cost(const Instance& inst, std::span<const EdgeIndex> tree, const NarrowCutFamily& family,
                         const LonelyClassification& lonely) {
  EdgeVector out = inst.costs();
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    Rational sum = 0;
    Rational largest = 0;
    for (std::size_t j = 0; j < lonely.lonely_cuts.size(); ++j) {
      if (!inst.crosses(e, family.cuts.at(lonely.lonely_cuts[j]).cut.side)) {
        continue;
      }
      const Rational& c = inst.costs()[lonely.lonely_edge_at[j]];
      sum += c;
      if (c > largest) {
        largest = c;
      }
    }
    out[e] += 2 * (sum - largest);
  }
  for (const EdgeIndex e : tree) {
    if (out[e] != inst.costs()[e]) {
      throw CertificateViolation("modified_cost: c^S differs from c on a tree edge");
    }
  }
  return out;
}

std::vector<EdgeIndex> reconnect(const Instance& inst, std::span<const EdgeIndex> forest) {
  DisjointSets dsu(inst.num_vertices());
  for (const EdgeIndex e : forest) {
    dsu.unite(inst.edge(e).u, inst.edge(e).v);
  }
  std::vector<EdgeIndex> order(inst.num_edges());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeIndex a, EdgeIndex b) { return inst.costs()[a] < inst.costs()[b]; });
  std::vector<EdgeIndex> out;
  for (const EdgeIndex e : order) {
    if (dsu.count() == 1) {
      break;
    }
    if (dsu.unite(inst.edge(e).u, inst.edge(e).v)) {
      out.push_back(e);
    }
  }
  if (dsu.count() != 1) {
    throw std::logic_error("reconnect: instance graph is disconnected");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeIndex> reconnect(const Instance& inst, const EdgeMultiset& forest) {
  const auto support = forest.support();
  return reconnect(inst, support);
}

BomcResult best_of_many_christofides(const Instance& inst, const TreeCombination& combination) {
  if (combination.trees.empty()) {
    throw std::invalid_argument("best_of_many_christofides: empty combination");
  }
  BomcResult out;
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const auto& tree = combination.trees[i].edges;
    BomcCandidate candidate;
    candidate.tree = i;
    candidate.targets = odd_vertices(inst, tree) ^ inst.terminals();
    candidate.join = min_join(inst, inst.costs(), candidate.targets);
    candidate.tour = EdgeMultiset::from_edges(inst.num_edges(), tree);
    candidate.tour.add_all(candidate.join.edges);
    candidate.cost = cost(inst, candidate.tour);
    require_tour(inst, candidate.tour, "best_of_many_christofides");
    out.candidates.push_back(std::move(candidate));
  }
  const auto best = std::min_element(out.candidates.begin(), out.candidates.end(),
                                     [](const BomcCandidate& a, const BomcCandidate& b) { return a.cost < b.cost; });
  out.best = Tour{best->tour, best->cost, Algorithm::kBestOfManyChristofides, best->tree};
  return out;
}

DeletionResult lonely_edge_deletion(const Instance& inst, const TreeCombination& combination,
                                    const NarrowCutFamily& family,
                                    const std::vector<LonelyClassification>& lonely) {
  if (combination.trees.empty() || lonely.size() != combination.trees.size()) {
    throw std::invalid_argument("lonely_edge_deletion: classification does not match combination");
  }
  DeletionResult out;
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const auto& tree = combination.trees[i].edges;
    const LonelyClassification& cls = lonely[i];
    DeletionCandidate candidate;
    candidate.tree = i;
    std::set_difference(tree.begin(), tree.end(), cls.lonely_edges.begin(), cls.lonely_edges.end(),
                        std::back_inserter(candidate.forest));
    candidate.targets = odd_vertices(inst, candidate.forest) ^ inst.terminals();
    candidate.modified_cost = modified_cost(inst, tree, family, cls);
    candidate.join = min_join(inst, candidate.modified_cost, candidate.targets);
    candidate.join_cost = cost(inst.costs(), candidate.join.edges);

    EdgeMultiset connected = EdgeMultiset::from_edges(inst.num_edges(), candidate.forest);
    connected.add_all(candidate.join.edges);
    candidate.reconnection = reconnect(inst, connected);
    candidate.reconnection_cost = cost(inst.costs(), candidate.reconnection);

    candidate.tour = std::move(connected);
    candidate.tour.add_all(candidate.reconnection, 2);
    candidate.cost = cost(inst, candidate.tour);
    require_tour(inst, candidate.tour, "lonely_edge_deletion");
    out.candidates.push_back(std::move(candidate));
  }
  const auto best =
    std::min_element(out.candidates.begin(), out.candidates.end(),
                     [](const DeletionCandidate& a, const DeletionCandidate& b) { return a.cost < b.cost; });
  out.best = Tour{best->tour, best->cost, Algorithm::kLonelyEdgeDeletion, best->tree};
  return out;
}

PipelineResult combined(const Instance& inst) {
  PipelineResult out;
  out.lp = solve_lp(inst);
  out.combination = decompose(inst, out.lp.x_star);
  for (const WeightedTree& tree : out.combination.trees) {
    out.structures.push_back(tree_structure(inst, tree.edges));
  }
  out.family = narrow_cuts(inst, out.lp.x_star);
  out.lonely = lonely_classification(inst, out.family, out.combination);
  out.lonely_vectors = lonely_vectors(inst, out.family, out.combination, out.lonely);
  std::vector<std::vector<EdgeIndex>> lonely_edges;
  for (const LonelyClassification& cls : out.lonely) {
    lonely_edges.push_back(cls.lonely_edges);
  }
  out.aggregates = aggregate_vectors(inst, out.combination, out.structures, lonely_edges);
  out.bomc = best_of_many_christofides(inst, out.combination);
  out.deletion = lonely_edge_deletion(inst, out.combination, out.family, out.lonely);
  out.best = out.deletion.best.cost < out.bomc.best.cost ? out.deletion.best : out.bomc.best;
  return out;
}

} // namespace ttour
