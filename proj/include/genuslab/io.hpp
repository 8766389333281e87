#pragma once

// JSON forms: graph {"n": 4, "edges": [[1, 2], ...]} with edge order giving
// the indices; rotation {"rotation": {"1": [darts...], ...}}.

#include <string>

#include <json.hpp>

#include "genuslab/embedding.hpp"
#include "genuslab/graph.hpp"

namespace genuslab {

nlohmann::json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

nlohmann::json rotation_to_json(const RotationSystem& r);
/// Vertices missing from the object are rejected.
RotationSystem rotation_from_json(const MultiGraph& g, const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace genuslab
