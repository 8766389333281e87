#include <doctest.h>

#include <algorithm>

#include "genuslab/embedding.hpp"
#include "genuslab/near_wheel.hpp"

using namespace genuslab;

TEST_CASE("attach point parsing") {
  CHECK(parse_attach_point("V2", 6) == AttachPoint::vertex(2));
  CHECK(parse_attach_point("C", 6) == AttachPoint::vertex(7));
  CHECK(parse_attach_point("S3", 6) == AttachPoint::spoke(3));
  CHECK(parse_attach_point("R5", 6) == AttachPoint::rim(5));
  CHECK(AttachPoint::vertex(7).label(6) == "C");
  CHECK(AttachPoint::rim(2).label(6) == "R2");
  CHECK_THROWS(parse_attach_point("S7", 6));
  CHECK_THROWS(parse_attach_point("X1", 6));
  CHECK_THROWS(parse_attach_point("V", 6));
  CHECK_THROWS(parse_attach_point("V0", 6));
}

TEST_CASE("construction") {
  const NearWheel k4plus = build_near_wheel(3, {AttachPoint::vertex(1), AttachPoint::vertex(2), AttachPoint::vertex(3)});
  CHECK(k4plus.graph.vertex_count() == 5);
  CHECK(k4plus.graph.degree(k4plus.apex) == 3);
  CHECK(min_genus_bruteforce(k4plus.graph) == 0);

  const NearWheel spokes = build_near_wheel(6, {AttachPoint::spoke(1), AttachPoint::spoke(3), AttachPoint::spoke(5)});
  CHECK(spokes.graph.vertex_count() == 7 + 3 + 1);
  CHECK(spokes.graph.edge_count() == 12 + 3 + 3);
  CHECK(spokes.apex == 11);
  CHECK(spokes.antenna_vertices == std::array<Vertex, 3>{8, 9, 10});
  for (Vertex v : spokes.antenna_vertices) CHECK(spokes.graph.degree(v) == 3);

  CHECK_THROWS(build_near_wheel(6, {AttachPoint::spoke(1), AttachPoint::spoke(1), AttachPoint::spoke(5)}));
}

TEST_CASE("faces of the planar wheel") {
  CHECK(faces_containing(5, AttachPoint::vertex(6)).size() == 5);
  CHECK(faces_containing(5, AttachPoint::vertex(2)).size() == 3);
  CHECK(faces_containing(5, AttachPoint::spoke(2)).size() == 2);
  CHECK(faces_containing(5, AttachPoint::rim(2)).size() == 2);
  const auto outer_a = faces_containing(5, AttachPoint::rim(1));
  const auto outer_b = faces_containing(5, AttachPoint::rim(3));
  std::vector<int> shared;
  std::set_intersection(outer_a.begin(), outer_a.end(), outer_b.begin(), outer_b.end(), std::back_inserter(shared));
  CHECK(shared.size() == 1);
}

TEST_CASE("prediction cases") {
  const auto common = predict_genus(6, {AttachPoint::vertex(1), AttachPoint::vertex(2), AttachPoint::vertex(7)});
  CHECK(common.genus == 0);
  CHECK(to_string(common.label) == "common-face");

  const auto two = predict_genus(6, {AttachPoint::vertex(2), AttachPoint::spoke(3), AttachPoint::rim(5)});
  CHECK(two.genus == 1);
  CHECK(to_string(two.label) == "two-faces");

  const auto sep = predict_genus(6, {AttachPoint::spoke(1), AttachPoint::spoke(3), AttachPoint::spoke(5)});
  CHECK(sep.genus == 1);
  CHECK(to_string(sep.label) == "pairwise-separated");

  const auto sep2 = predict_genus(6, {AttachPoint::rim(1), AttachPoint::spoke(4), AttachPoint::spoke(6)});
  CHECK(sep2.label == NearWheelCase::pairwise_separated);
}

TEST_CASE("prediction is symmetric in the three points") {
  const auto configs = attach_configurations(5);
  for (std::size_t i = 0; i < configs.size(); i += 7) {
    auto a = configs[i];
    const auto base = predict_genus(5, a);
    std::sort(a.begin(), a.end());
    do {
      CHECK(predict_genus(5, a).genus == base.genus);
      CHECK(predict_genus(5, a).label == base.label);
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST_CASE("configuration count") {
  // 3n + 1 points, unordered triples.
  for (int n = 3; n <= 6; ++n) {
    const std::size_t p = 3 * n + 1;
    CHECK(attach_configurations(n).size() == p * (p - 1) * (p - 2) / 6);
  }
}

TEST_CASE("sweep for n = 3 and 4 matches brute force") {
  const auto rep = verify_theorem_a(3, 4);
  CHECK(rep.ok());
  CHECK(rep.checked.size() == attach_configurations(3).size() + attach_configurations(4).size());
}

TEST_CASE("subdividing an extra edge leaves the genus alone") {
  const std::array<AttachPoint, 3> attach{AttachPoint::spoke(1), AttachPoint::spoke(3), AttachPoint::vertex(5)};
  const NearWheel nw = build_near_wheel(5, attach);
  const int g = min_genus_bruteforce(nw.graph);
  CHECK(g == predict_genus(5, attach).genus);
  for (std::size_t e = 0; e < nw.graph.edge_count(); e += 3) {
    CHECK(min_genus_bruteforce(subdivide_edge(nw.graph, EdgeRef{e}).first) == g);
  }
}

TEST_CASE("constructed separated-spokes word") {
  const auto w = separated_spokes_word(6, 2, 2);
  CHECK(render_word(w) == "a1 y x x- a2 a1- a4 a3- a3 a2- y- a4- a5- a5 a6- a6");
  const auto r = reduce_to_standard(w);
  CHECK(r.genus == 1);
  CHECK(r.trace.back().word_after == "a1 y a1- y-");
  CHECK(reduce_to_standard(separated_spokes_word(9, 3, 4)).genus == 1);
  CHECK_THROWS(separated_spokes_word(4, 2, 3));
}
