#include <doctest.h>

#include <random>

#include "genuslab/catalog.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/joint_tree.hpp"
#include "genuslab/near_wheel.hpp"

using namespace genuslab;

TEST_CASE("joint tree labels") {
  const MultiGraph c3 = cycle(3);
  const JointTree jt = build_joint_tree(c3, spanning_tree(c3), RotationSystem::identity(c3));
  CHECK(jt.betti() == 1);
  CHECK(jt.split_tree_vertex_count() == 5);
  const EdgeRef co = jt.tree.co_tree_edges.front();
  CHECK(jt.letter(dart_of(co.index, 0)).text() == "a1");
  CHECK(jt.letter(dart_of(co.index, 1)).text() == "a1-");
  CHECK(render_word(associated_surface(jt)) == "a1 a1-");

  const MultiGraph k4 = complete_graph(4);
  CHECK(build_joint_tree(k4, spanning_tree(k4), RotationSystem::identity(k4)).betti() == 3);
  CHECK_THROWS(build_joint_tree(k4, spanning_tree(cycle(4)), RotationSystem::identity(k4)));
}

TEST_CASE("planar K4 reads a genus 0 word of length 6") {
  const MultiGraph k4 = complete_graph(4);
  const RotationSystem r = min_genus_rotation(k4);
  const auto w = associated_surface(build_joint_tree(k4, spanning_tree(k4), r));
  CHECK(w.polygons().front().size() == 6);
  CHECK(reduce_to_standard(w).genus == 0);
}

TEST_CASE("word genus equals face genus for every rotation of small graphs") {
  for (const char* name : {"K4", "K3,3", "theta", "dumbbell", "prism3", "W4"}) {
    CAPTURE(name);
    const MultiGraph& g = catalog_graph(name);
    std::mt19937_64 rng(5);
    std::vector<SpanningTree> trees{spanning_tree(g), random_spanning_tree(g, rng), random_spanning_tree(g, rng)};
    for (const auto& r : enumerate_rotations(g, 100000)) {
      const int faces_genus = genus_of(Embedding(g, r));
      for (const auto& t : trees) {
        const auto w = associated_surface(build_joint_tree(g, t, r));
        CHECK(static_cast<int>(w.polygons().front().size()) == 2 * betti(g));
        CHECK(reduce_to_standard(w).genus == faces_genus);
      }
    }
  }
}

TEST_CASE("genus does not depend on where the walk starts") {
  std::mt19937_64 rng(8);
  const MultiGraph g = petersen();
  for (int i = 0; i < 50; ++i) {
    const RotationSystem r = RotationSystem::random(g, rng);
    const auto w = associated_surface(build_joint_tree(g, spanning_tree(g), r));
    auto poly = w.polygons().front();
    std::rotate(poly.begin(), poly.begin() + 1 + i % 5, poly.end());
    CHECK(genus_oracle(OrientedWordSystem({poly})) == genus_of(Embedding(g, r)));
  }
}

TEST_CASE("separated antennae on W6 give genus 1 through the joint tree") {
  const std::array<std::array<AttachPoint, 3>, 2> cases{{
      {AttachPoint::spoke(1), AttachPoint::spoke(3), AttachPoint::spoke(5)},
      {AttachPoint::rim(1), AttachPoint::spoke(3), AttachPoint::spoke(5)},
  }};
  for (const auto& attach : cases) {
    const NearWheel nw = build_near_wheel(6, attach);
    const RotationSystem r = min_genus_rotation(nw.graph);
    const auto w = associated_surface(build_joint_tree(nw.graph, spanning_tree(nw.graph), r));
    CHECK(static_cast<int>(w.pair_count()) == betti(nw.graph));
    CHECK(reduce_to_standard(w).genus == 1);
  }
}
