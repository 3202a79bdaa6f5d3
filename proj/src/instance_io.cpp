#include "ttour/instance_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace ttour {

using nlohmann::json;

namespace {

Rational rational_field(const json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw InvalidInstance(field + ": " + err.what());
    }
  }
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<std::int64_t>()));
  }
  throw InvalidInstance(field + ": expected a rational string \"p/q\"");
}

std::string string_field(const json& value, const std::string& field) {
  if (!value.is_string()) {
    throw InvalidInstance(field + ": expected a string");
  }
  return value.get<std::string>();
}

const json& member(const json& object, const char* key, const std::string& field) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw InvalidInstance(field + ": missing field '" + key + "'");
  }
  return *it;
}

std::vector<std::string> string_list(const json& value, const std::string& field) {
  if (!value.is_array()) {
    throw InvalidInstance(field + ": expected an array");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(string_field(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

} // namespace

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw InvalidInstance("document: expected a JSON object");
  }
  std::vector<std::string> vertices = string_list(member(doc, "vertices", "document"), "vertices");
  const json& edge_list = member(doc, "edges", "document");
  if (!edge_list.is_array()) {
    throw InvalidInstance("edges: expected an array");
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const json& item = edge_list[i];
    if (!item.is_object()) {
      throw InvalidInstance(field + ": expected an object");
    }
    edges.push_back(EdgeSpec{
      string_field(member(item, "id", field), field + ".id"),
      string_field(member(item, "u", field), field + ".u"),
      string_field(member(item, "v", field), field + ".v"),
      rational_field(member(item, "cost", field), field + ".cost"),
    });
  }
  std::vector<std::string> terminals = string_list(member(doc, "T", "document"), "T");
  return Instance(std::move(vertices), std::move(edges), std::move(terminals));
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInstance("file: cannot open '" + path.string() + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw InvalidInstance("file: invalid JSON in '" + path.string() + "': " + err.what());
  }
  return instance_from_json(doc);
}

json instance_to_json(const Instance& inst) {
  json edges = json::array();
  for (const Edge& edge : inst.edges()) {
    edges.push_back({{"id", edge.id},
                     {"u", inst.vertex_name(edge.u)},
                     {"v", inst.vertex_name(edge.v)},
                     {"cost", to_string(edge.cost)}});
  }
  return json{{"vertices", inst.vertex_names()},
              {"edges", std::move(edges)},
              {"T", vertex_names(inst, inst.terminals())}};
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << instance_to_json(inst).dump(2) << '\n';
}

std::string instance_digest(const Instance& inst) {
  const std::string text = instance_to_json(inst).dump();
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char ch : text) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

json to_json(const Rational& value) { return to_string(value); }

json edge_vector_json(const Instance& inst, const EdgeVector& values) {
  json out = json::object();
  for (EdgeIndex e = 0; e < values.size(); ++e) {
    if (values[e] != 0) {
      out[inst.edge(e).id] = to_string(values[e]);
    }
  }
  return out;
}

json multiset_json(const Instance& inst, const EdgeMultiset& multiset) {
  json out = json::object();
  for (EdgeIndex e = 0; e < multiset.num_edges(); ++e) {
    if (multiset.count(e) > 0) {
      out[inst.edge(e).id] = multiset.count(e);
    }
  }
  return out;
}

EdgeVector edge_vector_from_json(const Instance& inst, const json& doc, const EdgeVector& fallback) {
  if (!doc.is_object()) {
    throw InvalidInstance("costs: expected an object of edge-id to rational");
  }
  EdgeVector out = fallback;
  for (const auto& [id, value] : doc.items()) {
    const EdgeIndex e = inst.edge_index(id);
    out[e] = rational_field(value, "costs." + id);
    if (out[e] < 0) {
      throw InvalidInstance("costs." + id + ": negative cost");
    }
  }
  return out;
}

} // namespace ttour
