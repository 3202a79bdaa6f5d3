#pragma once

#include "ttour/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace ttour {

/// {"vertices": [...], "edges": [{"id","u","v","cost"}], "T": [...]}.
/// Costs are "p/q" / "p" strings or JSON integers. Errors are InvalidInstance
/// with the offending field first.
Instance instance_from_json(const nlohmann::json& doc);
Instance read_instance(const std::filesystem::path& path);

/// Inverse of instance_from_json. Vertices come out sorted by identifier.
nlohmann::json instance_to_json(const Instance& inst);
void write_instance(const Instance& inst, const std::filesystem::path& path);

/// Hex FNV-1a 64 of the compact canonical JSON serialization.
std::string instance_digest(const Instance& inst);

nlohmann::json to_json(const Rational& value);
/// {"edge-id": "p/q"} over the nonzero entries.
nlohmann::json edge_vector_json(const Instance& inst, const EdgeVector& values);
/// {"edge-id": multiplicity} over the support.
nlohmann::json multiset_json(const Instance& inst, const EdgeMultiset& multiset);

/// Reads {"edge-id": "p/q", ...}; edges absent from the document keep `fallback`.
EdgeVector edge_vector_from_json(const Instance& inst, const nlohmann::json& doc,
                                 const EdgeVector& fallback);

} // namespace ttour
