#include <doctest.h>

#include <random>

#include "genuslab/catalog.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/errors.hpp"

using namespace genuslab;

namespace {

// Independent face count: orbits of d -> sigma(twin(d)) by plain marking.
int naive_faces(const MultiGraph& g, const RotationSystem& r) {
  std::vector<Dart> succ(g.dart_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto& c = r.at(v);
    for (std::size_t i = 0; i < c.size(); ++i) succ[c[i]] = c[(i + 1) % c.size()];
  }
  std::vector<bool> seen(g.dart_count(), false);
  int faces = 0;
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (Dart x = static_cast<Dart>(d); !seen[x]; x = succ[twin(x)]) seen[x] = true;
  }
  return g.dart_count() == 0 ? 1 : faces;
}

BigInt factorial_product(const MultiGraph& g) {
  BigInt p = 1;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) p *= factorial(static_cast<unsigned>(std::max(1, g.degree(v)) - 1));
  return p;
}

// The plane K4: vertex 4 in the middle of triangle 1 2 3.
Embedding planar_k4() {
  const MultiGraph g = complete_graph(4);  // edges 12 13 14 23 24 34
  // darts: e0 (0 at 1, 1 at 2), e1 (2 at 1, 3 at 3), e2 (4 at 1, 5 at 4),
  //        e3 (6 at 2, 7 at 3), e4 (8 at 2, 9 at 4), e5 (10 at 3, 11 at 4)
  return Embedding(g, RotationSystem(g, {{0, 4, 2}, {1, 6, 8}, {3, 10, 7}, {5, 9, 11}}));
}

}  // namespace

TEST_CASE("rotation systems validate") {
  const MultiGraph g = complete_graph(3);
  CHECK_NOTHROW(RotationSystem(g, {{0, 2}, {1, 4}, {3, 5}}));
  CHECK_THROWS_AS(RotationSystem(g, {{0, 2}, {1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(RotationSystem(g, {{0, 1}, {2, 4}, {3, 5}}), std::invalid_argument);
  const RotationSystem r(g, {{2, 0}, {4, 1}, {5, 3}});
  CHECK(r.canonical().at(1) == std::vector<Dart>{0, 2});
}

TEST_CASE("face tracing") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const MultiGraph t = path({3, 1, 4, 2, 5});
    CHECK(trace_faces(Embedding(t, RotationSystem::random(t, rng))).size() == 1);
    const MultiGraph c = cycle(6);
    CHECK(trace_faces(Embedding(c, RotationSystem::random(c, rng))).size() == 2);
  }
  const Embedding k4 = planar_k4();
  CHECK(trace_faces(k4).size() == 4);
  CHECK(genus_of(k4) == 0);
  CHECK(trace_faces(Embedding(build_graph(1, {}), RotationSystem(build_graph(1, {}), {{}}))).size() == 1);

  const FaceSet fs = trace_faces(k4);
  std::vector<int> count(k4.graph.dart_count(), 0);
  for (const auto& f : fs.faces) {
    for (Dart d : f) ++count[d];
  }
  for (int c : count) CHECK(c == 1);
  for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs.faces[i - 1].front() < fs.faces[i].front());
}

TEST_CASE("face tracing matches an independent orbit count") {
  std::mt19937_64 rng(3);
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    for (int i = 0; i < 30; ++i) {
      const RotationSystem r = RotationSystem::random(e.graph, rng);
      const int f = static_cast<int>(trace_faces(Embedding(e.graph, r)).size());
      CHECK(f == naive_faces(e.graph, r));
      if (is_connected(e.graph)) {
        const int chi = e.graph.vertex_count() - static_cast<int>(e.graph.edge_count()) + f;
        CHECK(chi % 2 == 0);
        CHECK(chi <= 2);
        CHECK((f - 1 - betti(e.graph)) % 2 == 0);
      }
    }
  }
}

TEST_CASE("euler genus parity guard") {
  CHECK(euler_genus(4, 6, 4) == 0);
  CHECK(euler_genus(5, 10, 1) == 3);
  CHECK_THROWS_AS(euler_genus(4, 6, 3), InternalError);
}

TEST_CASE("rotation enumeration counts") {
  CHECK(RotationEnumerator::count_for(complete_graph(4)) == 16);
  CHECK(RotationEnumerator::count_for(complete_bipartite(3, 3)) == 64);
  CHECK(RotationEnumerator::count_for(complete_graph(5)) == 7776);
  const auto all = enumerate_rotations(complete_graph(4), 1000);
  CHECK(all.size() == 16);
  std::set<RotationSystem> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 16);
  for (const auto& r : all) CHECK(r == r.canonical());

  const RotationEnumerator en(complete_graph(4), 100);
  CHECK(en.at(5) == all[5]);
  CHECK_THROWS_AS(RotationEnumerator(complete_graph(5), 1000), BudgetExceeded);
  try {
    RotationEnumerator(complete_graph(5), 1000);
  } catch (const BudgetExceeded& ex) {
    CHECK(ex.required() == 7776);
    CHECK(ex.budget() == 1000);
  }
}

TEST_CASE("genus oracles") {
  CHECK(min_genus_bruteforce(complete_bipartite(3, 3)) == 1);
  CHECK(max_genus_bruteforce(complete_graph(4)) == 1);
  CHECK(min_genus_bruteforce(complete_graph(5)) == 1);
  CHECK(max_genus_bruteforce(complete_graph(5)) == 3);
  for (int n = 3; n <= 6; ++n) CHECK(min_genus_bruteforce(wheel(n)) == 0);
  CHECK(is_upper_embeddable(complete_graph(4)));
  CHECK(is_upper_embeddable(complete_bipartite(3, 3)));
  CHECK(is_upper_embeddable(path({1, 2, 3})));
  CHECK(min_genus_bruteforce(petersen()) == 1);

  RunConfig tight;
  tight.enumeration_budget = 10;
  CHECK_THROWS_AS(min_genus_bruteforce(complete_graph(5), tight), BudgetExceeded);
}

TEST_CASE("genus distribution totals and sandwich") {
  for (const char* name : {"K4", "K3,3", "W5", "prism3", "theta", "dumbbell", "cube"}) {
    CAPTURE(name);
    const MultiGraph& g = catalog_graph(name);
    const GenusDistribution d = genus_distribution(g);
    CHECK(d.total() == factorial_product(g));
    CHECK(d.min_genus() == min_genus_bruteforce(g));
    CHECK(d.max_genus() == max_genus_bruteforce(g));
  }
  RunConfig one;
  one.thread_count = 1;
  RunConfig four;
  four.thread_count = 4;
  CHECK(genus_distribution(complete_graph(5), one).counts == genus_distribution(complete_graph(5), four).counts);
  CHECK(min_genus_rotation(petersen(), one) == min_genus_rotation(petersen(), four));

  GenusDistribution a, b;
  a.counts = {{0, 2}, {1, 3}};
  b.counts = {{1, 1}, {2, 5}};
  GenusDistribution ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  CHECK(ab.counts == ba.counts);
  CHECK(ab.total() == 11);
}

TEST_CASE("extreme rotations realize the extremes") {
  const MultiGraph g = complete_graph(5);
  CHECK(genus_of(Embedding(g, min_genus_rotation(g))) == 1);
  CHECK(genus_of(Embedding(g, max_genus_rotation(g))) == 3);
}

TEST_CASE("minimum genus of a disconnected graph adds over components") {
  const MultiGraph two = build_graph(12, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6},
                                          {7, 10}, {7, 11}, {7, 12}, {8, 10}, {8, 11}, {8, 12}, {9, 10}, {9, 11}, {9, 12}});
  CHECK(min_genus_of_components(two) == 2);
}

TEST_CASE("planar wheel embedding") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const Embedding e = planar_wheel_embedding(n);
    const FaceSet fs = trace_faces(e);
    CHECK(static_cast<int>(fs.size()) == n + 1);
    CHECK(genus_of(e) == 0);
    int triangles = 0, big = 0;
    for (const auto& f : fs.faces) {
      if (f.size() == 3) ++triangles;
      if (static_cast<int>(f.size()) == n) ++big;
    }
    CHECK(triangles == (n == 3 ? 4 : n));
    CHECK(big >= 1);
  }
}
