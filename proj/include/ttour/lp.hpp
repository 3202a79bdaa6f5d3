#pragma once

#include "ttour/graph.hpp"

#include <optional>
#include <vector>

namespace ttour {

/// Vertex bound for the exhaustive separation routines (Bell(n) partitions).
inline constexpr std::size_t kMaxLpVertices = 12;
/// Vertex bound for materializing every constraint up front.
inline constexpr std::size_t kMaxEnumeratedLpVertices = 9;

/// One row of the T-tour LP: x(δ(U)) ≥ 2 for a T-even side U, or
/// x(δ(𝒲)) ≥ |𝒲| − 1 for a partition 𝒲.
struct LpConstraint {
  enum class Kind { kEvenCut, kPartition };

  Kind kind = Kind::kEvenCut;
  /// Canonical side for kEvenCut; unused otherwise.
  VertexSet side;
  /// Blocks for kPartition; unused otherwise.
  Partition partition;
  Rational rhs;
  std::vector<EdgeIndex> edges;

  static LpConstraint even_cut(const Instance& inst, VertexSet side);
  static LpConstraint partition_constraint(const Instance& inst, Partition partition);

  Rational load(const EdgeVector& x) const;
};

struct LpSolution {
  EdgeVector x_star;
  Rational value;
  /// Pool constraints tight at x*.
  std::vector<LpConstraint> active_constraints;
  /// Dual multipliers y > 0 of the final pool; b·y = value and Aᵀy ≤ c.
  std::vector<std::pair<LpConstraint, Rational>> dual_certificate;
  std::size_t rounds = 0;
  std::size_t pool_size = 0;
};

enum class LpMethod {
  /// Degree/singleton seed, then add violated cuts and partitions found by
  /// exhaustive separation until none remain.
  kRowGeneration,
  /// Every even cut and every partition in a single exact solve.
  kFullEnumeration,
};

struct LpOptions {
  LpMethod method = LpMethod::kRowGeneration;
  std::size_t max_rows_per_round = 24;
};

LpSolution solve_lp(const Instance& inst, const LpOptions& options = {});

/// Most violated T-even cut (x(δ(U)) < 2), ties to the lowest canonical side.
std::optional<Cut> separate_even_cut(const Instance& inst, const EdgeVector& x);
/// Most violated partition (x(δ(𝒲)) < |𝒲| − 1), ties to the first in
/// restricted-growth order.
std::optional<Partition> separate_partition(const Instance& inst, const EdgeVector& x);

/// Up to `limit` violated constraints of each family, most violated first.
std::vector<LpConstraint> violated_constraints(const Instance& inst, const EdgeVector& x,
                                               std::size_t limit);

struct LpCertificateCheck {
  bool nonnegative = false;
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool values_match = false;

  bool ok() const { return nonnegative && primal_feasible && dual_feasible && values_match; }
};

/// Re-checks an LpSolution from scratch: x* ≥ 0 passes both separation
/// oracles, the dual multipliers satisfy Aᵀy ≤ c with y ≥ 0, and
/// c·x* = b·y = value.
LpCertificateCheck verify_lp_certificate(const Instance& inst, const LpSolution& solution);

} // namespace ttour
