#pragma once

#include "ttour/errors.hpp"
#include "ttour/rational.hpp"

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ttour {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Subset of at most kMaxVertices vertices stored as a bitmask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet singleton(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet all(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexId v) const { return ((bits_ >> v) & 1U) != 0; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr void toggle(VertexId v) { bits_ ^= std::uint64_t{1} << v; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<VertexId> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  std::string id;
  VertexId u = 0;
  VertexId v = 0;
  Rational cost;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Edge as it appears in an instance file, endpoints by vertex identifier.
struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;
  Rational cost;
};

/// Connected multigraph with nonnegative rational costs and an even terminal
/// set T. Vertices are stored sorted by identifier, so vertex 0 is the
/// smallest identifier and serves as the root for cut canonicalization.
/// Edge indices follow input order. Immutable after construction.
class Instance {
public:
  static constexpr VertexId kRoot = 0;

  Instance(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
           std::vector<std::string> terminals);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  VertexId vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  EdgeIndex edge_index(std::string_view id) const;

  VertexSet terminals() const { return terminals_; }
  VertexSet all_vertices() const { return VertexSet::all(names_.size()); }

  /// Costs c as an edge vector.
  const EdgeVector& costs() const { return costs_; }

  bool crosses(EdgeIndex e, VertexSet side) const {
    const Edge& edge = edges_[e];
    return side.contains(edge.u) != side.contains(edge.v);
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> name_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  EdgeVector costs_;
  VertexSet terminals_;
};

/// Edge multiset F, multiplicity per edge index.
class EdgeMultiset {
public:
  explicit EdgeMultiset(std::size_t num_edges = 0) : counts_(num_edges, 0) {}

  static EdgeMultiset from_edges(std::size_t num_edges, std::span<const EdgeIndex> edges);
  /// Throws InvalidInstance naming the unknown edge-id.
  static EdgeMultiset from_ids(const Instance& inst, std::span<const std::string> ids);

  void add(EdgeIndex e, unsigned count = 1) { counts_.at(e) += count; }
  void add_all(std::span<const EdgeIndex> edges, unsigned count = 1);
  EdgeMultiset& operator+=(const EdgeMultiset& other);

  unsigned count(EdgeIndex e) const { return counts_.at(e); }
  std::size_t num_edges() const { return counts_.size(); }
  std::size_t total() const;
  std::vector<EdgeIndex> support() const;
  const std::vector<unsigned>& counts() const { return counts_; }

  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

private:
  std::vector<unsigned> counts_;
};

/// Cut δ(U) with U the side not containing the root.
struct Cut {
  VertexSet side;
  std::vector<EdgeIndex> edges;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Partition of V into nonempty blocks, blocks ordered by smallest member.
struct Partition {
  std::vector<VertexSet> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Union-find over vertex indices.
class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), count_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t count() const { return count_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
  std::size_t count_;
};

Rational cost(const Instance& inst, const EdgeMultiset& multiset);
Rational cost(const EdgeVector& costs, std::span<const EdgeIndex> edges);
/// Σ_e weights[e] · multiplicity(e).
Rational weighted_sum(const EdgeVector& weights, const EdgeMultiset& multiset);
/// Inner product of two edge vectors.
Rational dot(const EdgeVector& a, const EdgeVector& b);

/// y(δ(U)).
Rational cut_load(const Instance& inst, const EdgeVector& y, VertexSet side);
std::size_t count_crossing(const Instance& inst, std::span<const EdgeIndex> edges, VertexSet side);

VertexSet odd_vertices(const Instance& inst, const EdgeMultiset& multiset);
VertexSet odd_vertices(const Instance& inst, std::span<const EdgeIndex> edges);

/// Canonical cut for ∅ ≠ U ⊊ V; throws std::invalid_argument otherwise.
Cut cut_edges(const Instance& inst, VertexSet side);
VertexSet canonical_side(const Instance& inst, VertexSet side);

/// |U ∩ T| odd.
bool is_t_cut(const Instance& inst, const Cut& cut);
bool is_odd_cut(VertexSet side, VertexSet targets);

bool is_connected(const Instance& inst, const EdgeMultiset& multiset);
bool is_connected(const Instance& inst, std::span<const EdgeIndex> edges);
Partition components(const Instance& inst, const EdgeMultiset& multiset);
Partition components(const Instance& inst, std::span<const EdgeIndex> edges);

/// δ(𝒲): edges with endpoints in different blocks.
std::vector<EdgeIndex> crossing_edges(const Instance& inst, const Partition& partition);

/// Edge-index list is a spanning tree: n−1 edges, connected.
bool is_spanning_tree(const Instance& inst, std::span<const EdgeIndex> edges);

/// Calls fn(VertexSet side) for every canonical side (root excluded), in
/// increasing bitmask order. There are 2^{n−1} − 1 of them.
template <typename Fn>
void for_each_canonical_side(std::size_t num_vertices, Fn&& fn) {
  if (num_vertices < 2) {
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << (num_vertices - 1);
  for (std::uint64_t s = 1; s < limit; ++s) {
    fn(VertexSet(s << 1));
  }
}

/// Calls fn(block_of, num_blocks) for every set partition of {0..n−1} as a
/// restricted growth string, in lexicographic order.
template <typename Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
  if (n == 0) {
    return;
  }
  std::vector<unsigned> block_of(n, 0);
  std::vector<unsigned> prefix_max(n, 0);
  while (true) {
    fn(static_cast<const std::vector<unsigned>&>(block_of), prefix_max[n - 1] + 1);
    std::size_t i = n - 1;
    while (i > 0 && block_of[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      return;
    }
    ++block_of[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block_of[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block_of[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

Partition partition_from_blocks(const std::vector<unsigned>& block_of, unsigned num_blocks);

std::vector<std::string> vertex_names(const Instance& inst, VertexSet set);
std::vector<std::string> edge_ids(const Instance& inst, std::span<const EdgeIndex> edges);

} // namespace ttour
