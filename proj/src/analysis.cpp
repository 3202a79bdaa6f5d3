#include "ttour/analysis.hpp"

#include "ttour/tjoin.hpp"

#include <algorithm>
#include <deque>

namespace ttour {

namespace {

struct LooseClassification {
  std::vector<std::size_t> crossings;
  std::vector<std::size_t> lonely_cuts;
  std::vector<EdgeIndex> lonely_edge_at;
  std::vector<EdgeIndex> lonely_edges;  // sorted, may hold duplicates if the structure is broken
};

// Same sets as classify_tree, without throwing, so that a broken structure
// shows up as a failed certificate instead of an exception.
LooseClassification classify(const Instance& inst, const NarrowCutFamily& family, std::span<const EdgeIndex> tree) {
  LooseClassification out;
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const std::size_t count = count_crossing(inst, tree, family.cuts[k].cut.side);
    out.crossings.push_back(count);
    if (count == 1) {
      out.lonely_cuts.push_back(k);
      for (const EdgeIndex e : tree) {
        if (inst.crosses(e, family.cuts[k].cut.side)) {
          out.lonely_edge_at.push_back(e);
        }
      }
    }
  }
  out.lonely_edges = out.lonely_edge_at;
  std::sort(out.lonely_edges.begin(), out.lonely_edges.end());
  return out;
}

LonelyClassification strict(const LooseClassification& loose) {
  LonelyClassification out;
  out.crossings = loose.crossings;
  out.lonely_cuts = loose.lonely_cuts;
  out.lonely_edge_at = loose.lonely_edge_at;
  out.lonely_edges = loose.lonely_edges;
  return out;
}

bool lonely_structure_ok(const Instance& inst, const NarrowCutFamily& family, std::span<const EdgeIndex> tree,
                         const LooseClassification& cls) {
  if (std::adjacent_find(cls.lonely_edges.begin(), cls.lonely_edges.end()) != cls.lonely_edges.end()) {
    return false;
  }
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    if (cls.crossings[k] == 0) {
      return false;
    }
    if (cls.crossings[k] != 2) {
      continue;
    }
    std::size_t lonely_inside = 0;
    for (const EdgeIndex e : tree) {
      if (inst.crosses(e, family.cuts[k].cut.side) &&
          std::binary_search(cls.lonely_edges.begin(), cls.lonely_edges.end(), e)) {
        ++lonely_inside;
      }
    }
    if (lonely_inside >= 2) {
      return false;
    }
  }
  return true;
}

std::vector<EdgeIndex> t_join_of(const Instance& inst, std::span<const EdgeIndex> tree) {
  return tree_structure(inst, tree).t_join;
}

// v^C from the definition, one per narrow cut; zero for a cut no tree is lonely at.
std::vector<EdgeVector> lonely_vectors_of(const Instance& inst, const NarrowCutFamily& family,
                                          const TreeCombination& combination,
                                          const std::vector<LooseClassification>& lonely) {
  std::vector<EdgeVector> out(family.cuts.size(), EdgeVector(inst.num_edges(), 0));
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    for (std::size_t j = 0; j < lonely[i].lonely_cuts.size(); ++j) {
      out[lonely[i].lonely_cuts[j]][lonely[i].lonely_edge_at[j]] += combination.trees[i].weight;
    }
  }
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const Rational scale = Rational(1) / (2 - family.cuts[k].load);
    for (Rational& value : out[k]) {
      value *= scale;
    }
  }
  return out;
}

void axpy(EdgeVector& target, const Rational& scale, const EdgeVector& source) {
  for (std::size_t e = 0; e < target.size(); ++e) {
    if (source[e] != 0) {
      target[e] += scale * source[e];
    }
  }
}

Rational lonely_cost(const Instance& inst, const LooseClassification& cls) {
  Rational sum = 0;
  for (const EdgeIndex e : cls.lonely_edge_at) {
    sum += inst.costs()[e];
  }
  return sum;
}

struct Aggregates {
  EdgeVector i_p;
  EdgeVector j_p;
  EdgeVector l_p;
};

Aggregates aggregates_of(const Instance& inst, const TreeCombination& combination,
                         const std::vector<LooseClassification>& lonely) {
  Aggregates out{EdgeVector(inst.num_edges(), 0), EdgeVector(inst.num_edges(), 0), EdgeVector(inst.num_edges(), 0)};
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const Rational& p = combination.trees[i].weight;
    const TreeStructure structure = tree_structure(inst, combination.trees[i].edges);
    for (const EdgeIndex e : structure.t_join) {
      out.i_p[e] += p;
    }
    for (const EdgeIndex e : structure.complement) {
      out.j_p[e] += p;
    }
    for (const EdgeIndex e : lonely[i].lonely_edge_at) {
      out.l_p[e] += p;
    }
  }
  return out;
}

Rational lemma43_bound(const Instance& inst, const EdgeVector& x_star, const NarrowCutFamily& family,
                       const std::vector<EdgeVector>& v_c, const Rational& i_p_cost, const Rational& alpha) {
  Rational out = Rational(3, 2) * dot(inst.costs(), x_star) + alpha * i_p_cost;
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const Rational& load = family.cuts[k].load;
    out += (load - 1) * max0(1 - load / 2 - alpha) * dot(inst.costs(), v_c[k]);
  }
  return out;
}

} // namespace

EdgeVector y_vector(const Instance& inst, const EdgeVector& x_star, std::span<const EdgeIndex> tree,
                    const NarrowCutFamily& family, const std::vector<EdgeVector>& v_c, const Rational& alpha) {
  if (alpha < 0) {
    throw std::invalid_argument("y_vector: alpha must be nonnegative");
  }
  if (v_c.size() != family.cuts.size()) {
    throw std::invalid_argument("y_vector: one v^C per narrow cut required");
  }
  EdgeVector y(inst.num_edges());
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    y[e] = x_star[e] / 2;
  }
  for (const EdgeIndex e : t_join_of(inst, tree)) {
    y[e] += alpha;
  }
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    if (count_crossing(inst, tree, family.cuts[k].cut.side) == 1) {
      continue;
    }
    const Rational coefficient = max0(1 - family.cuts[k].load / 2 - alpha);
    if (coefficient != 0) {
      axpy(y, coefficient, v_c[k]);
    }
  }
  return y;
}

EdgeVector ybar_vector(const Instance& inst, const EdgeVector& x_star, std::span<const EdgeIndex> tree,
                       const NarrowCutFamily& family) {
  const LooseClassification cls = classify(inst, family, tree);
  EdgeVector y(inst.num_edges());
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    y[e] = Rational(2, 5) * x_star[e];
  }
  for (const EdgeIndex e : tree) {
    y[e] += Rational(1, 5);
  }
  for (const EdgeIndex e : t_join_of(inst, tree)) {
    if (!std::binary_search(cls.lonely_edges.begin(), cls.lonely_edges.end(), e)) {
      y[e] += Rational(1, 5);
    }
  }
  for (std::size_t j = 0; j < cls.lonely_cuts.size(); ++j) {
    y[cls.lonely_edge_at[j]] += Rational(2, 5) * (2 - family.cuts[cls.lonely_cuts[j]].load);
  }
  return y;
}

std::vector<EdgeVector> build_y(const Instance& inst, const EdgeVector& x_star, const TreeCombination& combination,
                                const NarrowCutFamily& family, const std::vector<EdgeVector>& v_c,
                                const Rational& alpha) {
  std::vector<EdgeVector> out;
  for (const WeightedTree& tree : combination.trees) {
    EdgeVector y = y_vector(inst, x_star, tree.edges, family, v_c, alpha);
    const VertexSet targets = odd_vertices(inst, tree.edges) ^ inst.terminals();
    if (join_polyhedron_violation(inst, y, targets)) {
      throw CertificateViolation("build_y: y^S misses an (odd(S) △ T)-cut");
    }
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<EdgeVector> build_ybar(const Instance& inst, const EdgeVector& x_star,
                                   const TreeCombination& combination, const NarrowCutFamily& family) {
  std::vector<EdgeVector> out;
  for (const WeightedTree& tree : combination.trees) {
    EdgeVector y = ybar_vector(inst, x_star, tree.edges, family);
    const LooseClassification cls = classify(inst, family, tree.edges);
    std::vector<EdgeIndex> forest;
    std::set_difference(tree.edges.begin(), tree.edges.end(), cls.lonely_edges.begin(), cls.lonely_edges.end(),
                        std::back_inserter(forest));
    const VertexSet targets = odd_vertices(inst, forest) ^ inst.terminals();
    if (join_polyhedron_violation(inst, y, targets)) {
      throw CertificateViolation("build_ybar: ȳ^S misses an (odd(F_S) △ T)-cut");
    }
    out.push_back(std::move(y));
  }
  return out;
}

InequalityCheck verify_reconnection_bound(const Instance& inst, const EdgeVector& x_star,
                                          std::span<const EdgeIndex> tree, const NarrowCutFamily& family,
                                          const LonelyClassification& lonely, const EdgeVector& modified) {
  (void)tree;
  InequalityCheck out;
  out.lhs = 0;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    out.lhs += x_star[e] * (modified[e] - inst.costs()[e]);
  }
  out.rhs = 0;
  for (std::size_t j = 0; j < lonely.lonely_cuts.size(); ++j) {
    out.rhs += 2 * (family.cuts[lonely.lonely_cuts[j]].load - 1) * inst.costs()[lonely.lonely_edge_at[j]];
  }
  return out;
}

HallWitness verify_hall(const Instance& inst, const EdgeVector& x_star, const NarrowCutFamily& family,
                        const LonelyClassification& lonely) {
  HallWitness out;
  out.value = 0;
  out.demand = lonely.lonely_cuts.size();
  if (out.demand == 0) {
    out.hall_condition = true;
    return out;
  }
  // Nodes: source, one per edge, one per lonely cut, sink. The edge → cut
  // arcs get capacity x*_e, which is as good as unbounded here.
  const std::size_t m = inst.num_edges();
  const std::size_t q = out.demand;
  const std::size_t source = 0;
  const std::size_t sink = 1 + m + q;
  const std::size_t size = sink + 1;
  std::vector<std::vector<Rational>> residual(size, std::vector<Rational>(size, 0));
  for (EdgeIndex e = 0; e < m; ++e) {
    residual[source][1 + e] = x_star[e];
    for (std::size_t j = 0; j < q; ++j) {
      if (inst.crosses(e, family.cuts[lonely.lonely_cuts[j]].cut.side)) {
        residual[1 + e][1 + m + j] = x_star[e];
      }
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    residual[1 + m + j][sink] = 1;
  }
  const auto capacity = residual;

  while (true) {
    std::vector<std::size_t> parent(size, size);
    parent[source] = source;
    std::deque<std::size_t> queue{source};
    while (!queue.empty() && parent[sink] == size) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < size; ++v) {
        if (parent[v] == size && residual[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] == size) {
      break;
    }
    Rational bottleneck = residual[parent[sink]][sink];
    for (std::size_t v = sink; v != source; v = parent[v]) {
      bottleneck = std::min(bottleneck, residual[parent[v]][v]);
    }
    for (std::size_t v = sink; v != source; v = parent[v]) {
      residual[parent[v]][v] -= bottleneck;
      residual[v][parent[v]] += bottleneck;
    }
    out.value += bottleneck;
  }

  for (EdgeIndex e = 0; e < m; ++e) {
    for (std::size_t j = 0; j < q; ++j) {
      const Rational flow = capacity[1 + e][1 + m + j] - residual[1 + e][1 + m + j];
      if (flow > 0) {
        out.flow.emplace_back(e, lonely.lonely_cuts[j], flow);
      }
    }
  }

  if (q <= 12) {
    bool ok = true;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << q) && ok; ++mask) {
      Rational covered = 0;
      for (EdgeIndex e = 0; e < m; ++e) {
        for (std::size_t j = 0; j < q; ++j) {
          if (((mask >> j) & 1U) && inst.crosses(e, family.cuts[lonely.lonely_cuts[j]].cut.side)) {
            covered += x_star[e];
            break;
          }
        }
      }
      ok = covered >= static_cast<long>(std::popcount(mask));
    }
    out.hall_condition = ok;
  }
  return out;
}

bool BoundReport::lambdas_valid() const {
  return lambdas.l1 >= 0 && lambdas.l2 >= 0 && lambdas.l3 >= 0 && lambdas.l1 + lambdas.l2 + lambdas.l3 == 1;
}

bool BoundReport::holds() const {
  return lambdas_valid() && algorithm1_within_lemma31() && algorithm1_within_lemma43() &&
         algorithm2_within_lemma51() && best_within_combination() && combination_within_theorem() &&
         std::all_of(lemma53.begin(), lemma53.end(), [](const InequalityCheck& c) { return c.holds(); });
}

BoundReport evaluate_bounds(const Instance& inst, const PipelineResult& pipeline, const Lambdas& lambdas) {
  const EdgeVector& x_star = pipeline.lp.x_star;
  const NarrowCutFamily& family = pipeline.family;
  const TreeCombination& combination = pipeline.combination;

  std::vector<LooseClassification> lonely;
  for (const WeightedTree& tree : combination.trees) {
    lonely.push_back(classify(inst, family, tree.edges));
  }
  const std::vector<EdgeVector> v_c = lonely_vectors_of(inst, family, combination, lonely);
  const Aggregates agg = aggregates_of(inst, combination, lonely);
  const Rational cx = dot(inst.costs(), x_star);
  const Rational c_ip = dot(inst.costs(), agg.i_p);

  BoundReport out;
  out.lambdas = lambdas;
  out.lp_value = cx;
  out.lemma31 = cx + dot(inst.costs(), agg.j_p);
  out.lemma43 = lemma43_bound(inst, x_star, family, v_c, c_ip, lambdas.alpha);
  out.lemma43_eight_fifths = lemma43_bound(inst, x_star, family, v_c, c_ip, kEightFifthsAlpha);
  out.lemma51 = Rational(8, 5) * cx + Rational(1, 5) * c_ip - Rational(2, 5) * dot(inst.costs(), agg.l_p);
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const Rational gap = 2 - family.cuts[k].load;
    out.lemma51 -= Rational(2, 5) * gap * gap * dot(inst.costs(), v_c[k]);
  }
  out.combination = lambdas.l1 * out.lemma31 + lambdas.l2 * out.lemma43 + lambdas.l3 * out.lemma51;
  out.theorem_bound = Rational(11, 7) * cx;
  out.algorithm1_cost = pipeline.bomc.best.cost;
  out.algorithm2_cost = pipeline.deletion.best.cost;
  out.best_cost = pipeline.best.cost;
  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const auto& tree = combination.trees[i].edges;
    const LonelyClassification cls = strict(lonely[i]);
    out.lemma53.push_back(
      verify_reconnection_bound(inst, x_star, tree, family, cls, modified_cost(inst, tree, family, cls)));
  }
  return out;
}

Rational g_function(const Rational& x) {
  if (x < 1 || x >= 2) {
    throw std::invalid_argument("g_function: x must lie in [1, 2)");
  }
  return ((x - 1) / (2 - x)) * max0(13 - 7 * x) + 2 * x - 4;
}

MaxFunctionCheck max_function_check() {
  MaxFunctionCheck out;
  out.value = g_function(out.argmax);
  bool first = true;
  for (long k = 1000; k < 2000; ++k) {
    const Rational x(k, 1000);
    const Rational value = g_function(x);
    if (first || value > out.grid_max) {
      out.grid_max = value;
      out.grid_argmax = x;
      first = false;
    }
    ++out.grid_points;
  }
  return out;
}

bool TreeCertificate::holds() const {
  return !y_violation && !ybar_violation && lonely_in_join && lonely_structure && modified_cost_valid &&
         join_reconnection.holds() && bomc_join.holds() && delete_join.holds() && lemma53.holds() && hall.holds() &&
         reconnection_cost.holds() && per_tree.holds();
}

CertificateReport certify(const Instance& inst, const PipelineResult& pipeline, const Lambdas& lambdas) {
  const EdgeVector& x_star = pipeline.lp.x_star;
  const NarrowCutFamily& family = pipeline.family;
  const TreeCombination& combination = pipeline.combination;
  const EdgeVector& c = inst.costs();
  const Rational cx = dot(c, x_star);

  CertificateReport out;
  out.lp = verify_lp_certificate(inst, pipeline.lp);

  Rational total = 0;
  bool trees_ok = !combination.trees.empty();
  for (const WeightedTree& tree : combination.trees) {
    trees_ok = trees_ok && tree.weight > 0 && is_spanning_tree(inst, tree.edges);
    total += tree.weight;
  }
  const EdgeVector average = tree_average(inst, combination);
  bool dominated = true;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    dominated = dominated && average[e] <= x_star[e];
  }
  out.decomposition_valid = trees_ok && total == 1 && dominated;

  std::vector<LooseClassification> lonely;
  for (const WeightedTree& tree : combination.trees) {
    lonely.push_back(classify(inst, family, tree.edges));
  }
  const std::vector<EdgeVector> v_c = lonely_vectors_of(inst, family, combination, lonely);

  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    CutCertificate cut;
    cut.cut = k;
    cut.load = family.cuts[k].load;
    cut.lonely_weight = 0;
    cut.crowded_weight = 0;
    for (std::size_t i = 0; i < combination.trees.size(); ++i) {
      (lonely[i].crossings[k] == 1 ? cut.lonely_weight : cut.crowded_weight) += combination.trees[i].weight;
    }
    out.cuts.push_back(std::move(cut));
  }

  for (std::size_t i = 0; i < combination.trees.size(); ++i) {
    const auto& tree = combination.trees[i].edges;
    const LooseClassification& cls = lonely[i];
    const LonelyClassification strict_cls = strict(cls);
    TreeCertificate cert;
    cert.tree = i;
    cert.weight = combination.trees[i].weight;

    const std::vector<EdgeIndex> t_join = t_join_of(inst, tree);
    cert.lonely_in_join = std::includes(t_join.begin(), t_join.end(), cls.lonely_edges.begin(), cls.lonely_edges.end());
    cert.lonely_structure = lonely_structure_ok(inst, family, tree, cls);

    std::vector<EdgeIndex> forest;
    std::set_difference(tree.begin(), tree.end(), cls.lonely_edges.begin(), cls.lonely_edges.end(),
                        std::back_inserter(forest));

    cert.y = y_vector(inst, x_star, tree, family, v_c, lambdas.alpha);
    cert.y_violation = join_polyhedron_violation(inst, cert.y, odd_vertices(inst, tree) ^ inst.terminals());
    cert.ybar = ybar_vector(inst, x_star, tree, family);
    cert.ybar_violation = join_polyhedron_violation(inst, cert.ybar, odd_vertices(inst, forest) ^ inst.terminals());

    EdgeVector modified;
    try {
      modified = modified_cost(inst, tree, family, strict_cls);
      cert.modified_cost_valid = true;
      for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
        cert.modified_cost_valid = cert.modified_cost_valid && modified[e] >= c[e];
      }
    } catch (const CertificateViolation&) {
      modified = c;
      cert.modified_cost_valid = false;
    }

    const BomcCandidate& bomc = pipeline.bomc.candidates.at(i);
    const DeletionCandidate& del = pipeline.deletion.candidates.at(i);
    const Rational join_modified = cost(modified, del.join.edges);
    cert.join_reconnection = {cost(c, del.join.edges) + 2 * cost(c, del.reconnection), join_modified};
    cert.bomc_join = {cost(c, bomc.join.edges), dot(c, cert.y)};
    cert.delete_join = {join_modified, dot(modified, cert.ybar)};
    cert.lemma53 = verify_reconnection_bound(inst, x_star, tree, family, strict_cls, modified);
    cert.hall = verify_hall(inst, x_star, family, strict_cls);

    Rational lonely_sum = 0;
    Rational gap_sum = 0;
    for (std::size_t j = 0; j < cls.lonely_cuts.size(); ++j) {
      const Rational& load = family.cuts[cls.lonely_cuts[j]].load;
      const Rational& edge_cost = c[cls.lonely_edge_at[j]];
      lonely_sum += Rational(4, 5) * (load - 1) * edge_cost;
      gap_sum += (2 - load) * edge_cost;
    }
    cert.reconnection_cost = {dot(modified, cert.ybar) - dot(c, cert.ybar), lonely_sum};
    cert.per_tree = {cost(c, forest) + dot(modified, cert.ybar),
                     Rational(2, 5) * cx + Rational(6, 5) * cost(c, tree) + Rational(1, 5) * cost(c, t_join) -
                       Rational(2, 5) * lonely_cost(inst, cls) - Rational(2, 5) * gap_sum};
    out.trees.push_back(std::move(cert));
  }

  const Aggregates agg = aggregates_of(inst, combination, lonely);
  EdgeVector identity(inst.num_edges(), 0);
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    axpy(identity, 2 - family.cuts[k].load, v_c[k]);
  }
  out.lonely_identity = identity == agg.l_p;
  out.join_split = dot(c, agg.i_p) + dot(c, agg.j_p) <= cx;

  out.tours_valid = is_t_tour(inst, pipeline.bomc.best.edges) && is_t_tour(inst, pipeline.deletion.best.edges) &&
                    is_t_tour(inst, pipeline.best.edges) &&
                    pipeline.best.cost == std::min(pipeline.bomc.best.cost, pipeline.deletion.best.cost) &&
                    pipeline.best.cost == cost(inst, pipeline.best.edges);

  out.bounds = evaluate_bounds(inst, pipeline, lambdas);
  out.max_function = max_function_check();
  if (cx != 0) {
    out.lonely_ratio = dot(c, agg.l_p) / cx;
    out.join_ratio = dot(c, agg.i_p) / cx;
  }

  out.all_hold = out.lp.ok() && out.decomposition_valid &&
                 std::all_of(out.cuts.begin(), out.cuts.end(),
                             [](const CutCertificate& cut) { return cut.lonely_share() && cut.crowded_share(); }) &&
                 std::all_of(out.trees.begin(), out.trees.end(), [](const TreeCertificate& t) { return t.holds(); }) &&
                 out.lonely_identity && out.join_split && out.tours_valid && out.bounds.holds() &&
                 out.max_function.holds();
  return out;
}

} // namespace ttour
