#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ttour/algorithms.hpp"
#include "ttour/oracle.hpp"

using namespace fixtures;

namespace {

TreeCombination single(std::vector<EdgeIndex> tree) {
  TreeCombination comb;
  comb.trees.push_back({std::move(tree), Rational(1)});
  return comb;
}

} // namespace

TEST_CASE("best of many christofides on fixtures") {
  const Instance p = p3();
  const BomcResult rp = best_of_many_christofides(p, single(edges(p, {"ab", "bc"})));
  CHECK(rp.best.cost == 2);
  CHECK(rp.best.edges == EdgeMultiset::from_edges(p.num_edges(), edges(p, {"ab", "bc"})));
  CHECK(rp.candidates[0].join.edges.empty());

  const Instance two = k2();
  const BomcResult r2 = best_of_many_christofides(two, single(edges(two, {"ab"})));
  CHECK(r2.best.cost == 1);

  const Instance k = k3();
  TreeCombination ck;
  for (const auto& tree : {edges(k, {"ab", "bc"}), edges(k, {"ab", "ac"}), edges(k, {"bc", "ac"})}) {
    ck.trees.push_back({tree, Rational(1, 3)});
  }
  const BomcResult rk = best_of_many_christofides(k, ck);
  for (const BomcCandidate& c : rk.candidates) {
    CHECK(c.cost == 3);
    CHECK(c.join.edges.size() == 1);
  }
  CHECK(rk.best.tree == 0);
}

TEST_CASE("modified cost") {
  const Instance q = p4c();
  const auto tree = edges(q, {"ab", "bc", "cd"});
  const NarrowCutFamily family = narrow_cuts(q, vec(q, {{"ab", "1"}, {"bc", "1"}, {"cd", "1"}}));
  const LonelyClassification cls = classify_tree(q, family, tree);
  const EdgeVector cs = modified_cost(q, tree, family, cls);
  CHECK(cs[q.edge_index("ad")] == 7);
  CHECK(cs[q.edge_index("ab")] == 1);

  const Instance p = p3();
  const auto tp = edges(p, {"ab", "bc"});
  const NarrowCutFamily fp = narrow_cuts(p, uniform(p, 1));
  CHECK(modified_cost(p, tp, fp, classify_tree(p, fp, tp))[p.edge_index("ab")] == 1);
}

TEST_CASE("lonely edge deletion on fixtures") {
  const Instance p = p3();
  const auto tp = edges(p, {"ab", "bc"});
  const NarrowCutFamily fp = narrow_cuts(p, uniform(p, 1));
  const DeletionResult rp = lonely_edge_deletion(p, single(tp), fp, {classify_tree(p, fp, tp)});
  const DeletionCandidate& cp = rp.candidates[0];
  CHECK(cp.forest.empty());
  CHECK(cp.targets == vertices(p, {"a", "c"}));
  CHECK(cp.join.edges == tp);
  CHECK(cp.join.cost == 2);
  CHECK(cp.reconnection.empty());
  CHECK(rp.best.cost == 2);

  const Instance q = p4c();
  const auto tq = edges(q, {"ab", "bc", "cd"});
  const NarrowCutFamily fq = narrow_cuts(q, vec(q, {{"ab", "1"}, {"bc", "1"}, {"cd", "1"}}));
  const DeletionResult rq = lonely_edge_deletion(q, single(tq), fq, {classify_tree(q, fq, tq)});
  const DeletionCandidate& cq = rq.candidates[0];
  CHECK(cq.forest.empty());
  CHECK(cq.targets == vertices(q, {"a", "d"}));
  CHECK(cq.join.edges == tq);
  CHECK(cq.join.cost == 3);
  CHECK(cq.reconnection.empty());
  CHECK(rq.best.cost == 3);

  const Instance k = k3();
  const auto tk = edges(k, {"ab", "bc"});
  const NarrowCutFamily fk = narrow_cuts(k, uniform(k, 1));
  const DeletionResult rk = lonely_edge_deletion(k, single(tk), fk, {classify_tree(k, fk, tk)});
  CHECK(rk.candidates[0].forest == tk);
  CHECK(rk.best.cost == 3);
}

TEST_CASE("reconnect") {
  const Instance p = p3();
  CHECK(reconnect(p, std::span<const EdgeIndex>(edges(p, {"ab", "bc"}))).empty());
  const Instance q = p4c();
  CHECK(reconnect(q, std::span<const EdgeIndex>(edges(q, {"ab", "cd"}))) == edges(q, {"bc"}));
  const auto mst = reconnect(q, std::span<const EdgeIndex>());
  CHECK(mst == edges(q, {"ab", "bc", "cd"}));
}

TEST_CASE("combined algorithm on fixtures") {
  for (const auto& [name, value] : std::vector<std::pair<std::string, int>>{
         {"p3", 2}, {"k2", 1}, {"k3", 3}, {"p4c", 3}, {"star", 3}}) {
    CAPTURE(name);
    const Instance inst = load(name);
    const PipelineResult run = combined(inst);
    CHECK(run.lp.value == value);
    CHECK(run.best.cost == value);
    CHECK(is_t_tour(inst, run.best.edges));
    CHECK(run.best.algorithm == Algorithm::kBestOfManyChristofides);
  }
}

TEST_CASE("every candidate is a T-tour and the reconnection join inequality holds") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Instance inst = generate({seed, n, 0.4, 2 * (seed % (n / 2 + 1)), 10});
    const PipelineResult run = combined(inst);
    for (const BomcCandidate& c : run.bomc.candidates) {
      CHECK(is_t_tour(inst, c.tour));
    }
    for (const DeletionCandidate& c : run.deletion.candidates) {
      CHECK(is_t_tour(inst, c.tour));
      CHECK(c.join_cost + 2 * c.reconnection_cost <= c.join.cost);
      for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
        CHECK(c.modified_cost[e] >= inst.costs()[e]);
      }
    }
    CHECK(run.best.cost <= Rational(11, 7) * run.lp.value);
    CHECK(run.best.cost == std::min(run.bomc.best.cost, run.deletion.best.cost));
  }
}
