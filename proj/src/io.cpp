#include "genuslab/io.hpp"

#include <fstream>
#include <stdexcept>

namespace genuslab {

nlohmann::json graph_to_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair [u, v]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return MultiGraph(j.at("n").get<int>(), std::move(edges));
}

nlohmann::json rotation_to_json(const RotationSystem& r) {
  nlohmann::json rot = nlohmann::json::object();
  for (Vertex v = 1; v <= r.vertex_count(); ++v) rot[std::to_string(v)] = r.at(v);
  return {{"rotation", rot}};
}

RotationSystem rotation_from_json(const MultiGraph& g, const nlohmann::json& j) {
  const auto& rot = j.contains("rotation") ? j.at("rotation") : j;
  if (!rot.is_object()) throw std::invalid_argument("rotation JSON needs a \"rotation\" object");
  std::vector<std::vector<Dart>> cycles(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto key = std::to_string(v);
    if (!rot.contains(key)) throw std::invalid_argument("rotation JSON has no entry for vertex " + key);
    cycles[v - 1] = rot.at(key).get<std::vector<Dart>>();
  }
  if (rot.size() != cycles.size()) throw std::invalid_argument("rotation JSON names vertices outside the graph");
  return RotationSystem(g, std::move(cycles));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace genuslab
