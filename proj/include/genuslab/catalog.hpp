#pragma once

// Named small graphs used by the tests, the acceptance suite and the CLI.

#include <string>
#include <string_view>
#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab {

struct CatalogEntry {
  std::string name;
  MultiGraph graph;
};

const std::vector<CatalogEntry>& catalog();
/// Throws std::invalid_argument for an unknown name.
const MultiGraph& catalog_graph(std::string_view name);

MultiGraph cube();
MultiGraph octahedron();
MultiGraph wagner();

}  // namespace genuslab
