#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ttour/lp.hpp"
#include "ttour/oracle.hpp"
#include "ttour/simplex.hpp"

#include <random>

using namespace fixtures;

TEST_CASE("simplex solves a textbook LP with exact duals") {
  RationalSimplex lp({Rational(4), Rational(6)});
  lp.add_column(1, {Rational(1), Rational(3)});
  lp.add_column(1, {Rational(2), Rational(1)});
  REQUIRE(lp.solve() == RationalSimplex::Status::kOptimal);
  CHECK(lp.objective_value() == Rational(14, 5));
  CHECK(lp.primal(0) == Rational(8, 5));
  CHECK(lp.primal(1) == Rational(6, 5));
  CHECK(lp.duals() == std::vector<Rational>{Rational(2, 5), Rational(1, 5)});
}

TEST_CASE("simplex reports unboundedness and accepts late columns") {
  RationalSimplex lp({Rational(1)});
  lp.add_column(1, {Rational(1)});
  REQUIRE(lp.solve() == RationalSimplex::Status::kOptimal);
  CHECK(lp.objective_value() == 1);
  lp.add_column(3, {Rational(2)});
  REQUIRE(lp.solve() == RationalSimplex::Status::kOptimal);
  CHECK(lp.objective_value() == Rational(3, 2));
  lp.add_column(1, {Rational(-1)});
  CHECK(lp.solve() == RationalSimplex::Status::kUnbounded);
}

TEST_CASE("fixture LP values") {
  const Instance p = p3();
  const LpSolution sp = solve_lp(p);
  CHECK(sp.value == 2);
  CHECK(sp.x_star == vec(p, {{"ab", "1"}, {"bc", "1"}}));

  const Instance k = k2();
  const LpSolution sk = solve_lp(k);
  CHECK(sk.value == 1);
  CHECK(sk.x_star == vec(k, {{"ab", "1"}}));

  const Instance t = k3();
  CHECK(solve_lp(t).value == 3);
  const Instance q = p4c();
  const LpSolution sq = solve_lp(q);
  CHECK(sq.value == 3);
  CHECK(sq.x_star == vec(q, {{"ab", "1"}, {"bc", "1"}, {"cd", "1"}}));
  CHECK(solve_lp(star()).value == 3);

  for (const Instance& inst : {p, k, t, q}) {
    LpOptions options;
    options.method = LpMethod::kFullEnumeration;
    CHECK(solve_lp(inst, options).value == solve_lp(inst).value);
    CHECK(verify_lp_certificate(inst, solve_lp(inst)).ok());
  }
}

TEST_CASE("even-cut separation") {
  const Instance k = k3();
  const auto cut = separate_even_cut(k, uniform(k, Rational(2, 3)));
  REQUIRE(cut);
  CHECK(cut->edges.size() == 2);
  CHECK(cut_load(k, uniform(k, Rational(2, 3)), cut->side) == Rational(4, 3));

  const Instance p = p3();
  CHECK_FALSE(separate_even_cut(p, uniform(p, 1)));
  const Instance two = k2();
  CHECK_FALSE(separate_even_cut(two, uniform(two, 1)));
}

TEST_CASE("partition separation") {
  const Instance p = p3();
  const auto found = separate_partition(p, vec(p, {{"ab", "1/2"}, {"bc", "1"}}));
  REQUIRE(found);
  REQUIRE(found->size() == 2);
  CHECK(found->blocks[0] == vertices(p, {"a"}));
  CHECK(found->blocks[1] == vertices(p, {"b", "c"}));

  const Instance k = k3();
  CHECK_FALSE(separate_partition(k, uniform(k, Rational(2, 3))));
  CHECK_FALSE(separate_partition(p, uniform(p, 1)));
}

TEST_CASE("LP value is invariant under relabeling") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Instance inst = generate({seed, 4 + seed % 3, 0.5, 2 * (seed % 3), 9});
    std::mt19937_64 rng(seed);
    std::vector<std::string> names = inst.vertex_names();
    std::vector<std::string> renamed;
    for (std::size_t i = 0; i < names.size(); ++i) {
      renamed.push_back("w" + std::to_string(names.size() - i));
    }
    std::vector<EdgeSpec> specs;
    for (const Edge& e : inst.edges()) {
      specs.push_back({e.id, renamed[e.u], renamed[e.v], e.cost});
    }
    std::shuffle(specs.begin(), specs.end(), rng);
    std::vector<std::string> terminals;
    for (const VertexId v : inst.terminals().members()) {
      terminals.push_back(renamed[v]);
    }
    const Instance permuted(renamed, specs, terminals);
    CHECK(solve_lp(permuted).value == solve_lp(inst).value);
  }
}

TEST_CASE("LP value never exceeds the optimal tour") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Instance inst = generate({seed, 3 + seed % 3, 0.3, 2 * (seed % 2), 6});
    if (inst.num_edges() > 9) {
      continue;
    }
    CHECK(solve_lp(inst).value <= cost(inst, opt_tour(inst)));
  }
}

TEST_CASE("LP size limit") {
  const Instance inst = generate({7, 13, 0.2, 0, 3});
  CHECK_THROWS_AS(solve_lp(inst), SizeLimitExceeded);
}
