#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ttour/analysis.hpp"
#include "ttour/oracle.hpp"

using namespace fixtures;

TEST_CASE("y^S on fixtures") {
  const Instance p = p3();
  const PipelineResult rp = combined(p);
  const auto yp = build_y(p, rp.lp.x_star, rp.combination, rp.family, rp.lonely_vectors, Rational(1, 14));
  CHECK(yp[0] == uniform(p, Rational(4, 7)));

  const Instance k = k3();
  const PipelineResult rk = combined(k);
  const auto yk = build_y(k, rk.lp.x_star, rk.combination, rk.family, rk.lonely_vectors, Rational(0));
  for (const EdgeVector& y : yk) {
    CHECK(y == uniform(k, Rational(1, 2)));
  }

  const Instance two = k2();
  const PipelineResult r2 = combined(two);
  CHECK(build_y(two, r2.lp.x_star, r2.combination, r2.family, r2.lonely_vectors, Rational(1, 14))[0] ==
        uniform(two, Rational(4, 7)));
}

TEST_CASE("ybar^S on fixtures") {
  const Instance p = p3();
  const PipelineResult rp = combined(p);
  const auto yp = build_ybar(p, rp.lp.x_star, rp.combination, rp.family);
  CHECK(yp[0] == uniform(p, 1));
  CHECK(cut_load(p, yp[0], vertices(p, {"b", "c"})) == 1);

  const Instance k = k3();
  const auto tk = edges(k, {"ab", "bc"});
  const EdgeVector yk = ybar_vector(k, uniform(k, 1), tk, NarrowCutFamily{});
  CHECK(yk == vec(k, {{"ab", "3/5"}, {"bc", "3/5"}, {"ac", "2/5"}}));
  CHECK(cut_load(k, yk, vertices(k, {"b", "c"})) == 1);

  const Instance q = p4c();
  const PipelineResult rq = combined(q);
  const EdgeVector yq = build_ybar(q, rq.lp.x_star, rq.combination, rq.family)[0];
  CHECK(yq[q.edge_index("ab")] == 1);
  CHECK(yq[q.edge_index("ad")] == 0);
}

TEST_CASE("reconnection bound and Hall witness") {
  for (const char* name : {"p3", "p4c", "k2", "k3"}) {
    CAPTURE(name);
    const Instance inst = load(name);
    const PipelineResult run = combined(inst);
    for (std::size_t i = 0; i < run.combination.trees.size(); ++i) {
      const auto& tree = run.combination.trees[i].edges;
      const InequalityCheck check = verify_reconnection_bound(inst, run.lp.x_star, tree, run.family, run.lonely[i],
                                                              run.deletion.candidates[i].modified_cost);
      CHECK(check.lhs == 0);
      CHECK(check.rhs == 0);
      const HallWitness hall = verify_hall(inst, run.lp.x_star, run.family, run.lonely[i]);
      CHECK(hall.holds());
      CHECK(hall.value == run.lonely[i].lonely_cuts.size());
      for (const auto& [e, k, flow] : hall.flow) {
        CHECK(flow == 1);
        CHECK(inst.crosses(e, run.family.cuts[k].cut.side));
        CHECK(std::find(tree.begin(), tree.end(), e) != tree.end());
      }
    }
  }

  const Instance k = k3();
  const PipelineResult rk = combined(k);
  CHECK(verify_hall(k, rk.lp.x_star, rk.family, rk.lonely[0]).flow.empty());
}

TEST_CASE("bound values on fixtures") {
  const Instance p = p3();
  const BoundReport bp = evaluate_bounds(p, combined(p));
  CHECK(bp.lemma31 == 2);
  CHECK(bp.lemma43 == Rational(22, 7));
  CHECK(bp.lemma51 == 2);
  CHECK(bp.combination == Rational(58, 21));
  CHECK(bp.theorem_bound == Rational(22, 7));
  CHECK(bp.holds());

  const Instance k = k3();
  const BoundReport bk = evaluate_bounds(k, combined(k));
  CHECK(bk.lemma31 == 5);
  CHECK(bk.algorithm1_cost == 3);
  CHECK(bk.holds());

  const Instance two = k2();
  const BoundReport b2 = evaluate_bounds(two, combined(two));
  CHECK(b2.lemma31 == 1);
  CHECK(b2.algorithm1_cost == 1);
  CHECK(b2.holds());
}

TEST_CASE("g and its maximum") {
  CHECK(g_function(Rational(5, 3)) == 2);
  CHECK(g_function(Rational(1)) == -2);
  CHECK(g_function(Rational(13, 7)) == Rational(-2, 7));
  const MaxFunctionCheck check = max_function_check();
  CHECK(check.holds());
  CHECK(check.grid_points == 1000);
  CHECK(check.grid_max < 2);
  CHECK(check.grid_argmax == Rational(1667, 1000));
  CHECK(check.grid_max == Rational(665999, 333000));
  CHECK_THROWS_AS(g_function(Rational(2)), std::invalid_argument);
}

TEST_CASE("certificates hold on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Instance inst = generate({seed, n, 0.45, 2 * (seed % (n / 2 + 1)), 10});
    const PipelineResult run = combined(inst);
    const CertificateReport report = certify(inst, run);
    CAPTURE(seed);
    CHECK(report.all_hold);
    for (std::size_t i = 0; i < run.combination.trees.size(); ++i) {
      const BomcCandidate& c = run.bomc.candidates[i];
      CHECK(c.join.cost <= dot(inst.costs(), report.trees[i].y));
    }
  }
}
