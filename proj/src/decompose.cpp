#include "ttour/decompose.hpp"

#include "ttour/simplex.hpp"

#include <algorithm>
#include <numeric>

namespace ttour {

namespace {

std::vector<EdgeIndex> kruskal(const Instance& inst, std::vector<EdgeIndex> order) {
  DisjointSets dsu(inst.num_vertices());
  std::vector<EdgeIndex> tree;
  for (const EdgeIndex e : order) {
    if (dsu.unite(inst.edge(e).u, inst.edge(e).v)) {
      tree.push_back(e);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<EdgeIndex> edges_by_weight(const Instance& inst, const EdgeVector& weights, bool descending) {
  std::vector<EdgeIndex> order(inst.num_edges());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return descending ? weights[a] > weights[b] : weights[a] < weights[b];
  });
  return order;
}

std::vector<Rational> indicator(const Instance& inst, std::span<const EdgeIndex> edges) {
  std::vector<Rational> column(inst.num_edges(), 0);
  for (const EdgeIndex e : edges) {
    column[e] = 1;
  }
  return column;
}

} // namespace

std::vector<EdgeIndex> minimum_spanning_tree(const Instance& inst, const EdgeVector& weights) {
  return kruskal(inst, edges_by_weight(inst, weights, false));
}

TreeCombination decompose(const Instance& inst, const EdgeVector& x_star) {
  if (x_star.size() != inst.num_edges()) {
    throw std::invalid_argument("decompose: x* does not match instance");
  }
  TreeCombination out;
  if (inst.num_vertices() == 1) {
    out.trees.push_back(WeightedTree{{}, Rational(1)});
    out.strictly_dominated = std::any_of(x_star.begin(), x_star.end(), [](const Rational& v) { return v != 0; });
    return out;
  }

  RationalSimplex master(x_star);
  std::vector<std::vector<EdgeIndex>> pool;
  pool.push_back(kruskal(inst, edges_by_weight(inst, x_star, true)));
  master.add_column(1, indicator(inst, pool.back()));

  while (true) {
    ++out.pricing_rounds;
    if (master.solve() != RationalSimplex::Status::kOptimal) {
      throw std::logic_error("decompose: master LP unbounded");
    }
    if (master.objective_value() >= 1) {
      break;
    }
    const EdgeVector prices = master.duals();
    std::vector<EdgeIndex> tree = minimum_spanning_tree(inst, prices);
    if (cost(prices, tree) >= 1) {
      throw CertificateViolation("decompose: x* is not in the connector polyhedron (tree packing value " +
                                 to_string(master.objective_value()) + " < 1)");
    }
    master.add_column(1, indicator(inst, tree));
    pool.push_back(std::move(tree));
  }

  const Rational total = master.objective_value();
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const Rational value = master.primal(k);
    if (value > 0) {
      out.trees.push_back(WeightedTree{pool[k], value / total});
    }
  }
  const EdgeVector average = tree_average(inst, out);
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (average[e] > x_star[e]) {
      throw CertificateViolation("decompose: combination not dominated by x*");
    }
    if (average[e] != x_star[e]) {
      out.strictly_dominated = true;
    }
  }
  return out;
}

TreeStructure tree_structure(const Instance& inst, std::span<const EdgeIndex> tree) {
  if (!is_spanning_tree(inst, tree)) {
    throw std::invalid_argument("tree_structure: edge set is not a spanning tree");
  }
  const std::size_t n = inst.num_vertices();
  std::vector<std::vector<EdgeIndex>> incident(n);
  for (const EdgeIndex e : tree) {
    incident[inst.edge(e).u].push_back(e);
    incident[inst.edge(e).v].push_back(e);
  }
  // Preorder from the root; parent_edge[v] links v to its parent.
  std::vector<VertexId> order{Instance::kRoot};
  std::vector<EdgeIndex> parent_edge(n, inst.num_edges());
  std::vector<bool> seen(n, false);
  seen[Instance::kRoot] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    for (const EdgeIndex e : incident[v]) {
      const VertexId w = inst.edge(e).other(v);
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
  }
  std::vector<unsigned> terminals_below(n, 0);
  TreeStructure out;
  out.tree.assign(tree.begin(), tree.end());
  std::sort(out.tree.begin(), out.tree.end());
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId v = order[i];
    terminals_below[v] += inst.terminals().contains(v) ? 1 : 0;
    const EdgeIndex e = parent_edge[v];
    terminals_below[inst.edge(e).other(v)] += terminals_below[v];
    (terminals_below[v] % 2 == 1 ? out.t_join : out.complement).push_back(e);
  }
  std::sort(out.t_join.begin(), out.t_join.end());
  std::sort(out.complement.begin(), out.complement.end());
  if (odd_vertices(inst, out.t_join) != inst.terminals()) {
    throw CertificateViolation("tree_structure: odd(I_S) != T");
  }
  return out;
}

EdgeVector tree_average(const Instance& inst, const TreeCombination& combination) {
  EdgeVector out(inst.num_edges(), 0);
  for (const WeightedTree& tree : combination.trees) {
    for (const EdgeIndex e : tree.edges) {
      out[e] += tree.weight;
    }
  }
  return out;
}

AggregateVectors aggregate_vectors(const Instance& inst, const TreeCombination& combination,
                                   const std::vector<TreeStructure>& structures,
                                   const std::vector<std::vector<EdgeIndex>>& lonely_edges) {
  if (structures.size() != combination.trees.size() || lonely_edges.size() != combination.trees.size()) {
    throw std::invalid_argument("aggregate_vectors: per-tree data missing");
  }
  AggregateVectors out{EdgeVector(inst.num_edges(), 0), EdgeVector(inst.num_edges(), 0),
                       EdgeVector(inst.num_edges(), 0)};
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const Rational& p = combination.trees[i].weight;
    for (const EdgeIndex e : structures[i].t_join) {
      out.i_p[e] += p;
    }
    for (const EdgeIndex e : structures[i].complement) {
      out.j_p[e] += p;
    }
    for (const EdgeIndex e : lonely_edges[i]) {
      out.l_p[e] += p;
    }
  }
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (out.l_p[e] > out.i_p[e]) {
      throw CertificateViolation("aggregate_vectors: L_p exceeds I_p on edge " + inst.edge(e).id);
    }
  }
  return out;
}

} // namespace ttour
