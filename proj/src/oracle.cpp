#include "ttour/oracle.hpp"

#include "ttour/lp.hpp"

#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

namespace ttour {

namespace {

class TourSearch {
public:
  explicit TourSearch(const Instance& inst) : inst_(inst), counts_(inst.num_edges(), 0) {}

  EdgeMultiset run() {
    visit(0, Rational(0));
    EdgeMultiset out(inst_.num_edges());
    for (EdgeIndex e = 0; e < inst_.num_edges(); ++e) {
      out.add(e, best_counts_.at(e));
    }
    return out;
  }

private:
  void visit(EdgeIndex e, const Rational& partial) {
    if (best_cost_ && partial >= *best_cost_) {
      return;
    }
    if (e == inst_.num_edges()) {
      if (feasible()) {
        best_cost_ = partial;
        best_counts_ = counts_;
      }
      return;
    }
    for (unsigned k = 0; k <= 2; ++k) {
      counts_[e] = k;
      visit(e + 1, partial + k * inst_.costs()[e]);
    }
    counts_[e] = 0;
  }

  bool feasible() const {
    VertexSet odd;
    DisjointSets dsu(inst_.num_vertices());
    for (EdgeIndex e = 0; e < inst_.num_edges(); ++e) {
      if (counts_[e] == 0) {
        continue;
      }
      const Edge& edge = inst_.edge(e);
      if (counts_[e] % 2 == 1) {
        odd.toggle(edge.u);
        odd.toggle(edge.v);
      }
      dsu.unite(edge.u, edge.v);
    }
    return odd == inst_.terminals() && dsu.count() == 1;
  }

  const Instance& inst_;
  std::vector<unsigned> counts_;
  std::optional<Rational> best_cost_;
  std::vector<unsigned> best_counts_;
};

class JoinSearch {
public:
  JoinSearch(const Instance& inst, const EdgeVector& costs, VertexSet targets)
      : inst_(inst), costs_(costs), targets_(targets), chosen_(inst.num_edges(), false) {}

  JoinResult run() {
    visit(0, Rational(0), VertexSet());
    return JoinResult{best_edges_, best_cost_.value()};
  }

private:
  void visit(EdgeIndex e, const Rational& partial, VertexSet odd) {
    if (best_cost_ && partial >= *best_cost_) {
      return;
    }
    if (e == inst_.num_edges()) {
      if (odd == targets_) {
        best_cost_ = partial;
        best_edges_.clear();
        for (EdgeIndex f = 0; f < chosen_.size(); ++f) {
          if (chosen_[f]) {
            best_edges_.push_back(f);
          }
        }
      }
      return;
    }
    visit(e + 1, partial, odd);
    chosen_[e] = true;
    const Edge& edge = inst_.edge(e);
    visit(e + 1, partial + costs_[e], odd ^ VertexSet::singleton(edge.u) ^ VertexSet::singleton(edge.v));
    chosen_[e] = false;
  }

  const Instance& inst_;
  const EdgeVector& costs_;
  VertexSet targets_;
  std::vector<bool> chosen_;
  std::optional<Rational> best_cost_;
  std::vector<EdgeIndex> best_edges_;
};

// Uniform draw from [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined and would break cross-platform reproducibility.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) {
    draw = rng();
  }
  return draw % bound;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

EdgeMultiset opt_tour(const Instance& inst) {
  if (inst.num_edges() > kMaxOracleTourEdges) {
    throw SizeLimitExceeded("opt_tour: at most " + std::to_string(kMaxOracleTourEdges) + " edges supported");
  }
  return TourSearch(inst).run();
}

JoinResult opt_join_bruteforce(const Instance& inst, const EdgeVector& costs, VertexSet targets) {
  if (inst.num_edges() > kMaxOracleJoinEdges) {
    throw SizeLimitExceeded("opt_join_bruteforce: at most " + std::to_string(kMaxOracleJoinEdges) +
                            " edges supported");
  }
  if (costs.size() != inst.num_edges()) {
    throw std::invalid_argument("opt_join_bruteforce: cost vector does not match instance");
  }
  if (targets.size() % 2 != 0 || (targets & inst.all_vertices()) != targets) {
    throw std::invalid_argument("opt_join_bruteforce: targets must be an even vertex subset");
  }
  return JoinSearch(inst, costs, targets).run();
}

Rational lp_value_enumerated(const Instance& inst) {
  LpOptions options;
  options.method = LpMethod::kFullEnumeration;
  return solve_lp(inst, options).value;
}

OracleResult run_oracle(const Instance& inst) {
  OracleResult out;
  out.opt_tour = opt_tour(inst);
  out.opt_tour_cost = cost(inst, out.opt_tour);
  out.lp_value = lp_value_enumerated(inst);
  return out;
}

Instance generate(const GeneratorOptions& options) {
  if (options.n < 2 || options.n > kMaxVertices) {
    throw std::invalid_argument("gen: n must lie in [2, " + std::to_string(kMaxVertices) + "]");
  }
  if (options.t_size % 2 != 0) {
    throw std::invalid_argument("gen: t-size must be even");
  }
  if (options.t_size > options.n) {
    throw std::invalid_argument("gen: t-size exceeds n");
  }
  if (!(options.density >= 0.0 && options.density <= 1.0)) {
    throw std::invalid_argument("gen: density must lie in [0, 1]");
  }
  if (options.max_cost < 0) {
    throw std::invalid_argument("gen: max-cost must be nonnegative");
  }

  std::mt19937_64 rng(options.seed);
  const std::size_t n = options.n;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "v%02zu", i);
    names.emplace_back(buffer);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[below(rng, i + 1)]);
  }

  std::vector<EdgeSpec> edges;
  const auto add_edge = [&](std::size_t a, std::size_t b) {
    const long c = static_cast<long>(below(rng, static_cast<std::uint64_t>(options.max_cost) + 1));
    edges.push_back(EdgeSpec{"e" + std::to_string(edges.size() + 1), names[a], names[b], Rational(c)});
  };
  for (std::size_t i = 1; i < n; ++i) {
    add_edge(order[i], order[below(rng, i)]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (unit(rng) < options.density) {
        add_edge(a, b);
      }
    }
  }

  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::string> terminals;
  for (std::size_t i = 0; i < options.t_size; ++i) {
    std::swap(pool[i], pool[i + below(rng, n - i)]);
    terminals.push_back(names[pool[i]]);
  }
  return Instance(std::move(names), std::move(edges), std::move(terminals));
}

} // namespace ttour
