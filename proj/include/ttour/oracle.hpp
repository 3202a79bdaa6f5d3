#pragma once

#include "ttour/graph.hpp"
#include "ttour/tjoin.hpp"

#include <cstdint>

namespace ttour {

/// Edge bound for opt_tour (3^|E| multisets).
inline constexpr std::size_t kMaxOracleTourEdges = 12;
/// Edge bound for opt_join_bruteforce (2^|E| subsets).
inline constexpr std::size_t kMaxOracleJoinEdges = 20;

struct OracleResult {
  Rational opt_tour_cost;
  EdgeMultiset opt_tour;
  Rational lp_value;
};

/// Cheapest T-tour over multiplicities {0, 1, 2}. Any edge used three or
/// more times can drop two copies without changing parity or connectivity,
/// so the cap loses nothing. Ties go to the lexicographically smallest
/// multiplicity vector. Throws SizeLimitExceeded above kMaxOracleTourEdges.
EdgeMultiset opt_tour(const Instance& inst);

/// Cheapest T'-join by enumerating every edge subset, ties to the
/// lexicographically smallest indicator vector.
JoinResult opt_join_bruteforce(const Instance& inst, const EdgeVector& costs, VertexSet targets);

/// LP value with every constraint written out; independent of row generation.
Rational lp_value_enumerated(const Instance& inst);

OracleResult run_oracle(const Instance& inst);

struct GeneratorOptions {
  std::uint64_t seed = 1;
  std::size_t n = 5;
  double density = 0.5;
  std::size_t t_size = 2;
  long max_cost = 10;
};

/// Random connected multigraph: a random spanning tree, then every vertex pair
/// gains an extra edge with probability `density`. Integer costs uniform in
/// [0, max_cost], T uniform among even subsets of size t_size. Deterministic
/// per seed on every platform. Throws std::invalid_argument on infeasible
/// parameters.
Instance generate(const GeneratorOptions& options);

} // namespace ttour
