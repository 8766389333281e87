#include "genuslab/catalog.hpp"

#include <stdexcept>
#include <string>

namespace genuslab {

MultiGraph cube() {
  return build_graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                         {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

MultiGraph octahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= 6; ++u) {
    for (Vertex v = u + 1; v <= 6; ++v) {
      if (!(u % 2 == 1 && v == u + 1)) edges.emplace_back(u, v);
    }
  }
  return build_graph(6, std::move(edges));
}

MultiGraph wagner() {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 8; ++v) edges.emplace_back(v, v % 8 + 1);
  for (Vertex v = 1; v <= 4; ++v) edges.emplace_back(v, v + 4);
  return build_graph(8, std::move(edges));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"K4", complete_graph(4)},
      {"K5", complete_graph(5)},
      {"K3,3", complete_bipartite(3, 3)},
      {"K3,4", complete_bipartite(3, 4)},
      {"W4", wheel(4)},
      {"W5", wheel(5)},
      {"W6", wheel(6)},
      {"prism3", prism(3)},
      {"prism5", prism(5)},
      {"cube", cube()},
      {"octahedron", octahedron()},
      {"petersen", petersen()},
      {"wagner", wagner()},
      {"theta", build_graph(2, {{1, 2}, {1, 2}, {1, 2}})},
      {"dumbbell", build_graph(2, {{1, 1}, {1, 2}, {2, 2}})},
      {"C5", cycle(5)},
      {"path4", path({1, 2, 3, 4})},
      {"star3", complete_bipartite(1, 3)},
  };
  return entries;
}

const MultiGraph& catalog_graph(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.graph;
  }
  throw std::invalid_argument("no catalog graph named '" + std::string(name) + "'");
}

}  // namespace genuslab
