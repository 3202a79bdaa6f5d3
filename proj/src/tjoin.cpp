#include "ttour/tjoin.hpp"

#include <algorithm>
#include <cstdint>

namespace ttour {

namespace {

struct ShortestPathTree {
  std::vector<std::optional<Rational>> dist;
  std::vector<EdgeIndex> pred_edge;
};

// Dense Dijkstra; n is at most 64 so the O(n²) scan is fine.
ShortestPathTree dijkstra(const Instance& inst, const std::vector<std::vector<EdgeIndex>>& incident,
                          const EdgeVector& costs, VertexId source) {
  const std::size_t n = inst.num_vertices();
  ShortestPathTree out{std::vector<std::optional<Rational>>(n), std::vector<EdgeIndex>(n, inst.num_edges())};
  std::vector<bool> done(n, false);
  out.dist[source] = Rational(0);
  while (true) {
    std::size_t best = n;
    for (VertexId v = 0; v < n; ++v) {
      if (!done[v] && out.dist[v] && (best == n || *out.dist[v] < *out.dist[best])) {
        best = v;
      }
    }
    if (best == n) {
      return out;
    }
    done[best] = true;
    for (const EdgeIndex e : incident[best]) {
      const VertexId w = inst.edge(e).other(best);
      Rational candidate = *out.dist[best] + costs[e];
      if (!out.dist[w] || candidate < *out.dist[w]) {
        out.dist[w] = std::move(candidate);
        out.pred_edge[w] = e;
      }
    }
  }
}

} // namespace

JoinResult min_join(const Instance& inst, const EdgeVector& costs, VertexSet targets) {
  if (costs.size() != inst.num_edges()) {
    throw std::invalid_argument("min_join: cost vector does not match instance");
  }
  if (targets.size() % 2 != 0) {
    throw std::invalid_argument("min_join: odd number of targets");
  }
  if ((targets & inst.all_vertices()) != targets) {
    throw std::invalid_argument("min_join: target outside the vertex set");
  }
  if (std::any_of(costs.begin(), costs.end(), [](const Rational& c) { return c < 0; })) {
    throw std::invalid_argument("min_join: negative cost");
  }
  const std::vector<VertexId> terminals = targets.members();
  const std::size_t k = terminals.size();
  if (k > kMaxJoinTargets) {
    throw SizeLimitExceeded("min_join: at most " + std::to_string(kMaxJoinTargets) + " targets supported");
  }
  if (k == 0) {
    return JoinResult{{}, Rational(0)};
  }

  std::vector<std::vector<EdgeIndex>> incident(inst.num_vertices());
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    incident[inst.edge(e).u].push_back(e);
    incident[inst.edge(e).v].push_back(e);
  }
  std::vector<ShortestPathTree> trees;
  trees.reserve(k);
  for (const VertexId t : terminals) {
    trees.push_back(dijkstra(inst, incident, costs, t));
  }

  // best[mask]: cheapest perfect matching of the targets in mask; the lowest
  // unmatched target is always paired first.
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::optional<Rational>> best(std::size_t{full} + 1);
  std::vector<std::pair<std::uint8_t, std::uint8_t>> choice(std::size_t{full} + 1);
  best[0] = Rational(0);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!best[mask]) {
      continue;
    }
    std::size_t i = 0;
    while ((mask >> i) & 1U) {
      ++i;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((mask >> j) & 1U) {
        continue;
      }
      const auto& d = trees[i].dist[terminals[j]];
      if (!d) {
        throw std::logic_error("min_join: graph is disconnected");
      }
      const std::uint32_t next = mask | (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      Rational candidate = *best[mask] + *d;
      if (!best[next] || candidate < *best[next]) {
        best[next] = std::move(candidate);
        choice[next] = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
      }
    }
  }

  std::vector<unsigned> parity(inst.num_edges(), 0);
  for (std::uint32_t mask = full; mask != 0;) {
    const auto [i, j] = choice[mask];
    VertexId v = terminals[j];
    while (v != terminals[i]) {
      const EdgeIndex e = trees[i].pred_edge[v];
      parity[e] ^= 1U;
      v = inst.edge(e).other(v);
    }
    mask &= ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  }

  JoinResult out;
  out.cost = 0;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (parity[e] != 0) {
      out.edges.push_back(e);
      out.cost += costs[e];
    }
  }
  if (odd_vertices(inst, out.edges) != targets) {
    throw CertificateViolation("min_join: result has wrong odd-vertex set");
  }
  if (out.cost > *best[full]) {
    throw CertificateViolation("min_join: join costs more than its matching");
  }
  return out;
}

std::optional<Cut> join_polyhedron_violation(const Instance& inst, const EdgeVector& y, VertexSet targets) {
  if (y.size() != inst.num_edges()) {
    throw std::invalid_argument("join_polyhedron_violation: vector does not match instance");
  }
  std::optional<Cut> found;
  if (targets.empty()) {
    return found;
  }
  const std::size_t n = inst.num_vertices();
  if (n > 20) {
    throw SizeLimitExceeded("join_polyhedron_violation: at most 20 vertices supported");
  }
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 1; s < limit && !found; ++s) {
    const VertexSet side(s << 1);
    if (is_odd_cut(side, targets) && cut_load(inst, y, side) < 1) {
      found = cut_edges(inst, side);
    }
  }
  return found;
}

} // namespace ttour
