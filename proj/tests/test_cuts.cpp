#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ttour/cuts.hpp"
#include "ttour/lp.hpp"
#include "ttour/oracle.hpp"

using namespace fixtures;

namespace {

std::vector<std::vector<EdgeIndex>> cut_edge_sets(const NarrowCutFamily& family) {
  std::vector<std::vector<EdgeIndex>> out;
  for (const NarrowCut& cut : family.cuts) {
    out.push_back(cut.cut.edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("narrow cuts on fixtures") {
  const Instance p = p3();
  const NarrowCutFamily fp = narrow_cuts(p, solve_lp(p).x_star);
  CHECK(cut_edge_sets(fp) == std::vector<std::vector<EdgeIndex>>{edges(p, {"ab"}), edges(p, {"bc"})});
  for (const NarrowCut& cut : fp.cuts) {
    CHECK(cut.load == 1);
  }

  const Instance k = k3();
  CHECK(narrow_cuts(k, solve_lp(k).x_star).cuts.empty());

  const Instance q = p4c();
  const NarrowCutFamily fq = narrow_cuts(q, solve_lp(q).x_star);
  auto expected = std::vector<std::vector<EdgeIndex>>{edges(q, {"ab", "ad"}), edges(q, {"cd", "ad"}),
                                                      edges(q, {"bc", "ad"})};
  std::sort(expected.begin(), expected.end());
  CHECK(cut_edge_sets(fq) == expected);
  for (const NarrowCut& cut : fq.cuts) {
    CHECK(cut.load == 1);
    CHECK(is_t_cut(q, cut.cut));
  }
}

TEST_CASE("narrow non-T-cut signals an infeasible x") {
  const Instance k = k3();
  CHECK_THROWS_AS(narrow_cuts(k, uniform(k, Rational(2, 3))), CertificateViolation);
}

TEST_CASE("lonely classification and v^C") {
  const Instance p = p3();
  const NarrowCutFamily fp = narrow_cuts(p, solve_lp(p).x_star);
  TreeCombination comb;
  comb.trees.push_back({edges(p, {"ab", "bc"}), Rational(1)});
  const auto lp = lonely_classification(p, fp, comb);
  CHECK(lp[0].lonely_cuts.size() == 2);
  CHECK(lp[0].lonely_edges == edges(p, {"ab", "bc"}));
  const auto vp = lonely_vectors(p, fp, comb, lp);
  for (std::size_t k = 0; k < fp.cuts.size(); ++k) {
    CHECK(vp[k] == EdgeVector(fp.cuts[k].cut.edges == edges(p, {"ab"}) ? vec(p, {{"ab", "1"}}) : vec(p, {{"bc", "1"}})));
  }

  const Instance two = k2();
  const NarrowCutFamily f2 = narrow_cuts(two, solve_lp(two).x_star);
  TreeCombination c2;
  c2.trees.push_back({edges(two, {"ab"}), Rational(1)});
  const auto v2 = lonely_vectors(two, f2, c2, lonely_classification(two, f2, c2));
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == vec(two, {{"ab", "1"}}));

  const Instance q = p4c();
  const NarrowCutFamily fq = narrow_cuts(q, solve_lp(q).x_star);
  TreeCombination cq;
  cq.trees.push_back({edges(q, {"ab", "bc", "cd"}), Rational(1)});
  const auto lq = lonely_classification(q, fq, cq);
  CHECK(lq[0].lonely_cuts.size() == 3);
  CHECK(lq[0].lonely_edges == edges(q, {"ab", "bc", "cd"}));
  const auto vq = lonely_vectors(q, fq, cq, lq);
  for (std::size_t k = 0; k < fq.cuts.size(); ++k) {
    if (fq.cuts[k].cut.edges == edges(q, {"bc", "ad"})) {
      CHECK(vq[k] == vec(q, {{"bc", "1"}}));
    }
  }
}

TEST_CASE("narrow-cut structure on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const Instance inst = generate({seed, n, 0.5, 2 * (seed % (n / 2 + 1)), 10});
    const EdgeVector x = solve_lp(inst).x_star;
    const NarrowCutFamily family = narrow_cuts(inst, x);
    const TreeCombination comb = decompose(inst, x);
    const auto lonely = lonely_classification(inst, family, comb);
    const auto v = lonely_vectors(inst, family, comb, lonely);
    for (std::size_t k = 0; k < family.cuts.size(); ++k) {
      const NarrowCut& cut = family.cuts[k];
      CHECK(cut.load >= 1);
      CHECK(cut.load < 2);
      CHECK(is_t_cut(inst, cut.cut));
      Rational lonely_weight = 0;
      Rational crowded_weight = 0;
      for (std::size_t i = 0; i < comb.trees.size(); ++i) {
        CHECK(lonely[i].crossings[k] >= 1);
        (lonely[i].is_lonely(k) ? lonely_weight : crowded_weight) += comb.trees[i].weight;
      }
      CHECK(cut.load >= 2 - lonely_weight);
      CHECK(crowded_weight <= cut.load - 1);
      CHECK(cost(v[k], cut.cut.edges) >= 1);
    }
    for (std::size_t i = 0; i < comb.trees.size(); ++i) {
      const TreeStructure s = tree_structure(inst, comb.trees[i].edges);
      CHECK(std::includes(s.t_join.begin(), s.t_join.end(), lonely[i].lonely_edges.begin(),
                          lonely[i].lonely_edges.end()));
    }
  }
}
