#pragma once

#include "ttour/instance_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace ttour;

inline Instance load(const std::string& name) {
  return read_instance(std::string(TTOUR_TEST_DATA) + "/" + name + ".json");
}

inline Instance p3() { return load("p3"); }
inline Instance k2() { return load("k2"); }
inline Instance k3() { return load("k3"); }
inline Instance p4c() { return load("p4c"); }
inline Instance star() { return load("star"); }

/// Sorted edge indices from edge ids.
inline std::vector<EdgeIndex> edges(const Instance& inst, std::initializer_list<const char*> ids) {
  std::vector<EdgeIndex> out;
  for (const char* id : ids) {
    out.push_back(inst.edge_index(id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexSet vertices(const Instance& inst, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* name : names) {
    out.insert(inst.vertex(name));
  }
  return out;
}

/// Edge vector from {id, "p/q"} pairs, zero elsewhere.
inline EdgeVector vec(const Instance& inst, std::initializer_list<std::pair<const char*, const char*>> entries) {
  EdgeVector out(inst.num_edges(), 0);
  for (const auto& [id, value] : entries) {
    out[inst.edge_index(id)] = parse_rational(value);
  }
  return out;
}

inline EdgeVector uniform(const Instance& inst, const Rational& value) { return EdgeVector(inst.num_edges(), value); }

} // namespace fixtures
