#include <doctest.h>

#include <random>

#include "genuslab/catalog.hpp"
#include "genuslab/io.hpp"

using namespace genuslab;

TEST_CASE("graph JSON round trip") {
  for (const auto& entry : catalog()) {
    const MultiGraph back = graph_from_json(graph_to_json(entry.graph));
    CHECK(back.vertex_count() == entry.graph.vertex_count());
    CHECK(back.edges() == entry.graph.edges());
  }
  CHECK(graph_to_json(cycle(3)) == nlohmann::json::parse(R"({"n":3,"edges":[[1,2],[2,3],[3,1]]})"));
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,3]]})")));
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")));
}

TEST_CASE("rotation JSON round trip") {
  std::mt19937_64 rng(3);
  const MultiGraph g = petersen();
  for (int i = 0; i < 20; ++i) {
    const RotationSystem r = RotationSystem::random(g, rng);
    const nlohmann::json j = rotation_to_json(r);
    CHECK(rotation_from_json(g, j) == r);
    CHECK(rotation_from_json(g, j["rotation"]) == r);
  }
  nlohmann::json bad = rotation_to_json(RotationSystem::identity(g));
  bad["rotation"].erase("1");
  CHECK_THROWS(rotation_from_json(g, bad));
}
