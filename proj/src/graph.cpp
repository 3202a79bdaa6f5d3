#include "ttour/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace ttour {

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  std::uint64_t rest = bits_;
  while (rest != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return out;
}

Instance::Instance(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
                   std::vector<std::string> terminals) {
  if (vertices.empty()) {
    throw InvalidInstance("vertices: at least one vertex required");
  }
  if (vertices.size() > kMaxVertices) {
    throw InvalidInstance("vertices: more than " + std::to_string(kMaxVertices) + " vertices");
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) {
      throw InvalidInstance("vertices: empty identifier");
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw InvalidInstance("vertices: duplicate identifier '" + vertices[i] + "'");
    }
    name_index_.emplace(vertices[i], i);
  }
  names_ = std::move(vertices);

  const auto lookup = [&](const std::string& name, const std::string& field) {
    const auto it = name_index_.find(name);
    if (it == name_index_.end()) {
      throw InvalidInstance(field + ": unknown vertex '" + name + "'");
    }
    return it->second;
  };

  DisjointSets dsu(names_.size());
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeSpec& spec = edges[i];
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (spec.id.empty()) {
      throw InvalidInstance(field + ".id: empty identifier");
    }
    if (!edge_lookup_.emplace(spec.id, i).second) {
      throw InvalidInstance(field + ".id: duplicate edge id '" + spec.id + "'");
    }
    const VertexId u = lookup(spec.u, field + ".u");
    const VertexId v = lookup(spec.v, field + ".v");
    if (u == v) {
      throw InvalidInstance(field + ": self-loop at '" + spec.u + "'");
    }
    if (spec.cost < 0) {
      throw InvalidInstance(field + ".cost: negative cost " + to_string(spec.cost));
    }
    dsu.unite(u, v);
    costs_.push_back(spec.cost);
    edges_.push_back(Edge{std::move(spec.id), u, v, std::move(spec.cost)});
  }

  for (const std::string& t : terminals) {
    const VertexId v = lookup(t, "T");
    if (terminals_.contains(v)) {
      throw InvalidInstance("T: duplicate terminal '" + t + "'");
    }
    terminals_.insert(v);
  }
  if (terminals_.size() % 2 != 0) {
    throw InvalidInstance("T: odd cardinality " + std::to_string(terminals_.size()));
  }
  if (dsu.count() != 1) {
    throw InvalidInstance("edges: graph is not connected");
  }
}

VertexId Instance::vertex(std::string_view name) const {
  const auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) {
    throw InvalidInstance("unknown vertex '" + std::string(name) + "'");
  }
  return it->second;
}

EdgeIndex Instance::edge_index(std::string_view id) const {
  const auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) {
    throw InvalidInstance("unknown edge-id '" + std::string(id) + "'");
  }
  return it->second;
}

EdgeMultiset EdgeMultiset::from_edges(std::size_t num_edges, std::span<const EdgeIndex> edges) {
  EdgeMultiset out(num_edges);
  out.add_all(edges);
  return out;
}

EdgeMultiset EdgeMultiset::from_ids(const Instance& inst, std::span<const std::string> ids) {
  EdgeMultiset out(inst.num_edges());
  for (const std::string& id : ids) {
    out.add(inst.edge_index(id));
  }
  return out;
}

void EdgeMultiset::add_all(std::span<const EdgeIndex> edges, unsigned count) {
  for (const EdgeIndex e : edges) {
    add(e, count);
  }
}

EdgeMultiset& EdgeMultiset::operator+=(const EdgeMultiset& other) {
  if (other.counts_.size() != counts_.size()) {
    throw std::invalid_argument("EdgeMultiset: size mismatch");
  }
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    counts_[e] += other.counts_[e];
  }
  return *this;
}

std::size_t EdgeMultiset::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::vector<EdgeIndex> EdgeMultiset::support() const {
  std::vector<EdgeIndex> out;
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] > 0) {
      out.push_back(e);
    }
  }
  return out;
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) {
    return false;
  }
  if (rank_[a] < rank_[b]) {
    std::swap(a, b);
  }
  parent_[b] = a;
  if (rank_[a] == rank_[b]) {
    ++rank_[a];
  }
  --count_;
  return true;
}

Rational cost(const Instance& inst, const EdgeMultiset& multiset) {
  return weighted_sum(inst.costs(), multiset);
}

Rational cost(const EdgeVector& costs, std::span<const EdgeIndex> edges) {
  Rational total = 0;
  for (const EdgeIndex e : edges) {
    total += costs.at(e);
  }
  return total;
}

Rational weighted_sum(const EdgeVector& weights, const EdgeMultiset& multiset) {
  Rational total = 0;
  for (std::size_t e = 0; e < multiset.num_edges(); ++e) {
    if (multiset.count(e) > 0) {
      total += weights.at(e) * multiset.count(e);
    }
  }
  return total;
}

Rational dot(const EdgeVector& a, const EdgeVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: size mismatch");
  }
  Rational total = 0;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e] != 0 && b[e] != 0) {
      total += a[e] * b[e];
    }
  }
  return total;
}

Rational cut_load(const Instance& inst, const EdgeVector& y, VertexSet side) {
  Rational total = 0;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (inst.crosses(e, side) && y[e] != 0) {
      total += y[e];
    }
  }
  return total;
}

std::size_t count_crossing(const Instance& inst, std::span<const EdgeIndex> edges, VertexSet side) {
  std::size_t count = 0;
  for (const EdgeIndex e : edges) {
    if (inst.crosses(e, side)) {
      ++count;
    }
  }
  return count;
}

VertexSet odd_vertices(const Instance& inst, const EdgeMultiset& multiset) {
  if (multiset.num_edges() != inst.num_edges()) {
    throw std::invalid_argument("odd_vertices: multiset does not match instance");
  }
  VertexSet odd;
  for (EdgeIndex e = 0; e < multiset.num_edges(); ++e) {
    if (multiset.count(e) % 2 == 1) {
      odd.toggle(inst.edge(e).u);
      odd.toggle(inst.edge(e).v);
    }
  }
  return odd;
}

VertexSet odd_vertices(const Instance& inst, std::span<const EdgeIndex> edges) {
  VertexSet odd;
  for (const EdgeIndex e : edges) {
    odd.toggle(inst.edge(e).u);
    odd.toggle(inst.edge(e).v);
  }
  return odd;
}

VertexSet canonical_side(const Instance& inst, VertexSet side) {
  if (side.contains(Instance::kRoot)) {
    return side ^ inst.all_vertices();
  }
  return side;
}

Cut cut_edges(const Instance& inst, VertexSet side) {
  const VertexSet all = inst.all_vertices();
  if (side.empty() || (side & all) == all || (side & all) != side) {
    throw std::invalid_argument("cut_edges: side must satisfy ∅ ≠ U ⊊ V");
  }
  Cut cut;
  cut.side = canonical_side(inst, side);
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (inst.crosses(e, cut.side)) {
      cut.edges.push_back(e);
    }
  }
  return cut;
}

bool is_odd_cut(VertexSet side, VertexSet targets) { return (side & targets).size() % 2 == 1; }

bool is_t_cut(const Instance& inst, const Cut& cut) { return is_odd_cut(cut.side, inst.terminals()); }

namespace {

Partition partition_from_dsu(const Instance& inst, DisjointSets& dsu) {
  const std::size_t n = inst.num_vertices();
  std::vector<std::size_t> block_of_root(n, n);
  Partition out;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t r = dsu.find(v);
    if (block_of_root[r] == n) {
      block_of_root[r] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of_root[r]].insert(v);
  }
  return out;
}

} // namespace

Partition components(const Instance& inst, std::span<const EdgeIndex> edges) {
  DisjointSets dsu(inst.num_vertices());
  for (const EdgeIndex e : edges) {
    dsu.unite(inst.edge(e).u, inst.edge(e).v);
  }
  return partition_from_dsu(inst, dsu);
}

Partition components(const Instance& inst, const EdgeMultiset& multiset) {
  const auto support = multiset.support();
  return components(inst, support);
}

bool is_connected(const Instance& inst, std::span<const EdgeIndex> edges) {
  DisjointSets dsu(inst.num_vertices());
  for (const EdgeIndex e : edges) {
    dsu.unite(inst.edge(e).u, inst.edge(e).v);
  }
  return dsu.count() == 1;
}

bool is_connected(const Instance& inst, const EdgeMultiset& multiset) {
  const auto support = multiset.support();
  return is_connected(inst, support);
}

std::vector<EdgeIndex> crossing_edges(const Instance& inst, const Partition& partition) {
  std::vector<std::size_t> block_of(inst.num_vertices(), partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (const VertexId v : partition.blocks[b].members()) {
      block_of.at(v) = b;
    }
  }
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < inst.num_edges(); ++e) {
    if (block_of[inst.edge(e).u] != block_of[inst.edge(e).v]) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_spanning_tree(const Instance& inst, std::span<const EdgeIndex> edges) {
  if (edges.size() + 1 != inst.num_vertices()) {
    return false;
  }
  std::unordered_set<EdgeIndex> seen;
  for (const EdgeIndex e : edges) {
    if (e >= inst.num_edges() || !seen.insert(e).second) {
      return false;
    }
  }
  return is_connected(inst, edges);
}

Partition partition_from_blocks(const std::vector<unsigned>& block_of, unsigned num_blocks) {
  Partition out;
  out.blocks.resize(num_blocks);
  for (std::size_t v = 0; v < block_of.size(); ++v) {
    out.blocks[block_of[v]].insert(v);
  }
  return out;
}

std::vector<std::string> vertex_names(const Instance& inst, VertexSet set) {
  std::vector<std::string> out;
  for (const VertexId v : set.members()) {
    out.push_back(inst.vertex_name(v));
  }
  return out;
}

std::vector<std::string> edge_ids(const Instance& inst, std::span<const EdgeIndex> edges) {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (const EdgeIndex e : edges) {
    out.push_back(inst.edge(e).id);
  }
  return out;
}

} // namespace ttour
