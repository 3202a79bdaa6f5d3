#include "ttour/lp.hpp"

#include "ttour/simplex.hpp"

#include <algorithm>
#include <cstdint>

namespace ttour {

LpConstraint LpConstraint::even_cut(const Instance& inst, VertexSet side) {
  LpConstraint out;
  out.kind = Kind::kEvenCut;
  Cut cut = cut_edges(inst, side);
  out.side = cut.side;
  out.edges = std::move(cut.edges);
  out.rhs = 2;
  return out;
}

LpConstraint LpConstraint::partition_constraint(const Instance& inst, Partition partition) {
  LpConstraint out;
  out.kind = Kind::kPartition;
  out.edges = crossing_edges(inst, partition);
  out.rhs = static_cast<long>(partition.size()) - 1;
  out.partition = std::move(partition);
  return out;
}

Rational LpConstraint::load(const EdgeVector& x) const { return cost(x, edges); }

namespace {

// x scaled by a common denominator so that separation runs on machine
// integers; `exact` is false when the scaled values would not fit.
struct ScaledVector {
  bool exact = false;
  std::vector<std::int64_t> values;
  std::int64_t unit = 1;
};

ScaledVector scale(const EdgeVector& x) {
  ScaledVector out;
  mpz_class den = 1;
  for (const Rational& v : x) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  if (den > mpz_class(1) << 30) {
    return out;
  }
  mpz_class total = 0;
  for (const Rational& v : x) {
    const mpz_class scaled = v.get_num() * (den / v.get_den());
    if (abs(scaled) > mpz_class(1) << 40) {
      return out;
    }
    total += abs(scaled);
    out.values.push_back(scaled.get_si());
  }
  if (total > mpz_class(1) << 56) {
    return out;
  }
  out.unit = den.get_si();
  out.exact = true;
  return out;
}

// Keeps the `limit` largest violations; ties favour the earlier enumeration order.
template <typename Num, typename Payload>
class TopViolations {
public:
  explicit TopViolations(std::size_t limit) : limit_(limit) {}

  template <typename MakePayload>
  void offer(const Num& violation, std::uint64_t order, MakePayload&& make) {
    if (limit_ == 0) {
      return;
    }
    if (items_.size() == limit_ && !better(violation, order, items_.front())) {
      return;
    }
    if (items_.size() == limit_) {
      std::pop_heap(items_.begin(), items_.end(), worse_first);
      items_.pop_back();
    }
    items_.push_back(Item{violation, order, make()});
    std::push_heap(items_.begin(), items_.end(), worse_first);
  }

  struct Item {
    Num violation;
    std::uint64_t order;
    Payload payload;
  };

  std::vector<Item> sorted() && {
    std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
      return better(a.violation, a.order, b);
    });
    return std::move(items_);
  }

private:
  static bool better(const Num& violation, std::uint64_t order, const Item& other) {
    return violation > other.violation || (violation == other.violation && order < other.order);
  }
  // Heap comparator: front holds the worst kept item.
  static bool worse_first(const Item& a, const Item& b) { return better(a.violation, a.order, b); }

  std::size_t limit_;
  std::vector<Item> items_;
};

template <typename Num>
std::vector<VertexSet> scan_even_cuts(const Instance& inst, const std::vector<Num>& x, const Num& unit,
                                      std::size_t limit) {
  TopViolations<Num, VertexSet> top(limit);
  const VertexSet terminals = inst.terminals();
  const Num threshold = unit * 2;
  std::uint64_t order = 0;
  for_each_canonical_side(inst.num_vertices(), [&](VertexSet side) {
    ++order;
    if (is_odd_cut(side, terminals)) {
      return;
    }
    Num load = 0;
    for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
      if (inst.crosses(e, side)) {
        load += x[e];
      }
    }
    if (load < threshold) {
      top.offer(Num(threshold - load), order, [&] { return side; });
    }
  });
  std::vector<VertexSet> out;
  for (auto& item : std::move(top).sorted()) {
    out.push_back(item.payload);
  }
  return out;
}

template <typename Num>
std::vector<Partition> scan_partitions(const Instance& inst, const std::vector<Num>& x, const Num& unit,
                                       std::size_t limit) {
  TopViolations<Num, Partition> top(limit);
  const std::size_t m = inst.num_edges();
  std::vector<VertexId> eu(m);
  std::vector<VertexId> ev(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    eu[e] = inst.edge(e).u;
    ev[e] = inst.edge(e).v;
  }
  std::uint64_t order = 0;
  for_each_set_partition(inst.num_vertices(), [&](const std::vector<unsigned>& block_of, unsigned blocks) {
    ++order;
    if (blocks < 2) {
      return;
    }
    Num load = 0;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (block_of[eu[e]] != block_of[ev[e]]) {
        load += x[e];
      }
    }
    const Num required = unit * static_cast<long>(blocks - 1);
    if (load < required) {
      top.offer(Num(required - load), order, [&] { return partition_from_blocks(block_of, blocks); });
    }
  });
  std::vector<Partition> out;
  for (auto& item : std::move(top).sorted()) {
    out.push_back(std::move(item.payload));
  }
  return out;
}

void check_lp_size(const Instance& inst) {
  if (inst.num_vertices() > kMaxLpVertices) {
    throw SizeLimitExceeded("lp: exhaustive separation supports at most " +
                            std::to_string(kMaxLpVertices) + " vertices");
  }
}

std::vector<VertexSet> violated_sides(const Instance& inst, const EdgeVector& x, std::size_t limit) {
  const ScaledVector scaled = scale(x);
  if (scaled.exact) {
    return scan_even_cuts<std::int64_t>(inst, scaled.values, scaled.unit, limit);
  }
  return scan_even_cuts<Rational>(inst, x, Rational(1), limit);
}

std::vector<Partition> violated_partitions(const Instance& inst, const EdgeVector& x, std::size_t limit) {
  const ScaledVector scaled = scale(x);
  if (scaled.exact) {
    return scan_partitions<std::int64_t>(inst, scaled.values, scaled.unit, limit);
  }
  return scan_partitions<Rational>(inst, x, Rational(1), limit);
}

void check_vector(const Instance& inst, const EdgeVector& x) {
  if (x.size() != inst.num_edges()) {
    throw std::invalid_argument("lp: edge vector does not match instance");
  }
}

std::vector<Rational> column_of(const Instance& inst, const LpConstraint& constraint) {
  std::vector<Rational> column(inst.num_edges(), 0);
  for (const EdgeIndex e : constraint.edges) {
    column[e] = 1;
  }
  return column;
}

std::vector<LpConstraint> seed_constraints(const Instance& inst) {
  std::vector<LpConstraint> out;
  const std::size_t n = inst.num_vertices();
  if (n < 2) {
    return out;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (inst.terminals().contains(v)) {
      const VertexSet single = VertexSet::singleton(v);
      const VertexSet rest = single ^ inst.all_vertices();
      Partition pair = v == Instance::kRoot ? Partition{{single, rest}} : Partition{{rest, single}};
      out.push_back(LpConstraint::partition_constraint(inst, std::move(pair)));
    } else {
      out.push_back(LpConstraint::even_cut(inst, VertexSet::singleton(v)));
    }
  }
  if (n > 2) {
    Partition singletons;
    for (VertexId v = 0; v < n; ++v) {
      singletons.blocks.push_back(VertexSet::singleton(v));
    }
    out.push_back(LpConstraint::partition_constraint(inst, std::move(singletons)));
  }
  return out;
}

std::vector<LpConstraint> all_constraints(const Instance& inst) {
  std::vector<LpConstraint> out;
  for_each_canonical_side(inst.num_vertices(), [&](VertexSet side) {
    if (!is_odd_cut(side, inst.terminals())) {
      out.push_back(LpConstraint::even_cut(inst, side));
    }
  });
  for_each_set_partition(inst.num_vertices(), [&](const std::vector<unsigned>& block_of, unsigned blocks) {
    if (blocks >= 2) {
      out.push_back(LpConstraint::partition_constraint(inst, partition_from_blocks(block_of, blocks)));
    }
  });
  return out;
}

} // namespace

std::optional<Cut> separate_even_cut(const Instance& inst, const EdgeVector& x) {
  check_vector(inst, x);
  check_lp_size(inst);
  const auto sides = violated_sides(inst, x, 1);
  if (sides.empty()) {
    return std::nullopt;
  }
  return cut_edges(inst, sides.front());
}

std::optional<Partition> separate_partition(const Instance& inst, const EdgeVector& x) {
  check_vector(inst, x);
  check_lp_size(inst);
  auto partitions = violated_partitions(inst, x, 1);
  if (partitions.empty()) {
    return std::nullopt;
  }
  return std::move(partitions.front());
}

std::vector<LpConstraint> violated_constraints(const Instance& inst, const EdgeVector& x, std::size_t limit) {
  check_vector(inst, x);
  check_lp_size(inst);
  std::vector<LpConstraint> out;
  for (const VertexSet side : violated_sides(inst, x, limit)) {
    out.push_back(LpConstraint::even_cut(inst, side));
  }
  for (Partition& partition : violated_partitions(inst, x, limit)) {
    out.push_back(LpConstraint::partition_constraint(inst, std::move(partition)));
  }
  return out;
}

LpSolution solve_lp(const Instance& inst, const LpOptions& options) {
  check_lp_size(inst);
  if (options.method == LpMethod::kFullEnumeration && inst.num_vertices() > kMaxEnumeratedLpVertices) {
    throw SizeLimitExceeded("lp: full enumeration supports at most " +
                            std::to_string(kMaxEnumeratedLpVertices) + " vertices");
  }

  // The simplex runs on the dual: max b·y s.t. Aᵀy ≤ c, y ≥ 0. Its rows are
  // edges with rhs c ≥ 0, its columns are LP constraints, and x* is read off
  // as the row prices.
  RationalSimplex simplex(inst.costs());
  std::vector<LpConstraint> pool =
    options.method == LpMethod::kFullEnumeration ? all_constraints(inst) : seed_constraints(inst);
  for (const LpConstraint& constraint : pool) {
    simplex.add_column(constraint.rhs, column_of(inst, constraint));
  }

  LpSolution solution;
  while (true) {
    ++solution.rounds;
    if (simplex.solve() != RationalSimplex::Status::kOptimal) {
      throw std::logic_error("lp: restricted dual unbounded although the primal is feasible");
    }
    EdgeVector x = simplex.duals();
    if (options.method == LpMethod::kFullEnumeration) {
      solution.x_star = std::move(x);
      break;
    }
    std::vector<LpConstraint> violated = violated_constraints(inst, x, options.max_rows_per_round);
    if (violated.empty()) {
      solution.x_star = std::move(x);
      break;
    }
    for (LpConstraint& constraint : violated) {
      simplex.add_column(constraint.rhs, column_of(inst, constraint));
      pool.push_back(std::move(constraint));
    }
  }

  solution.value = simplex.objective_value();
  if (dot(inst.costs(), solution.x_star) != solution.value) {
    throw std::logic_error("lp: primal and dual objective differ");
  }
  solution.pool_size = pool.size();
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (pool[k].load(solution.x_star) == pool[k].rhs) {
      solution.active_constraints.push_back(pool[k]);
    }
    Rational multiplier = simplex.primal(k);
    if (multiplier != 0) {
      solution.dual_certificate.emplace_back(pool[k], std::move(multiplier));
    }
  }
  return solution;
}

LpCertificateCheck verify_lp_certificate(const Instance& inst, const LpSolution& solution) {
  LpCertificateCheck check;
  check_vector(inst, solution.x_star);
  check.nonnegative = std::all_of(solution.x_star.begin(), solution.x_star.end(),
                                  [](const Rational& v) { return v >= 0; });
  check.primal_feasible = check.nonnegative && !separate_even_cut(inst, solution.x_star) &&
                          !separate_partition(inst, solution.x_star);

  EdgeVector used(inst.num_edges(), 0);
  Rational dual_value = 0;
  bool multipliers_ok = true;
  for (const auto& [constraint, multiplier] : solution.dual_certificate) {
    if (multiplier < 0) {
      multipliers_ok = false;
    }
    // Re-derive the row from its definition rather than trusting the stored edges.
    const LpConstraint fresh = constraint.kind == LpConstraint::Kind::kEvenCut
                                 ? LpConstraint::even_cut(inst, constraint.side)
                                 : LpConstraint::partition_constraint(inst, constraint.partition);
    if (fresh.kind == LpConstraint::Kind::kEvenCut && is_odd_cut(fresh.side, inst.terminals())) {
      multipliers_ok = false;
    }
    for (const EdgeIndex e : fresh.edges) {
      used[e] += multiplier;
    }
    dual_value += fresh.rhs * multiplier;
  }
  check.dual_feasible = multipliers_ok;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (used[e] > inst.costs()[e]) {
      check.dual_feasible = false;
    }
  }
  check.values_match = dot(inst.costs(), solution.x_star) == solution.value && dual_value == solution.value;
  return check;
}

} // namespace ttour
