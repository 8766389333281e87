#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>
#include <set>

#include "genuslab/catalog.hpp"
#include "genuslab/graph.hpp"

using namespace genuslab;

namespace {

int degree_sum(const MultiGraph& g) {
  int s = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) s += g.degree(v);
  return s;
}

}  // namespace

TEST_CASE("build_graph keeps loops and parallel edges") {
  const MultiGraph one = build_graph(2, {{1, 2}});
  CHECK(one.dart_count() == 2);
  CHECK(one.owner(0) == 1);
  CHECK(one.owner(1) == 2);

  const MultiGraph loop = build_graph(1, {{1, 1}});
  CHECK(loop.degree(1) == 2);
  CHECK(loop.is_loop(EdgeRef{0}));

  const MultiGraph theta = build_graph(2, {{1, 2}, {1, 2}, {1, 2}});
  CHECK(theta.edge_count() == 3);
  CHECK(theta.neighbors(1) == std::vector<Vertex>{2});
  CHECK_FALSE(is_simple(theta));

  CHECK_THROWS_AS(build_graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(one.check_edge(EdgeRef{1}), std::invalid_argument);
}

TEST_CASE("generators") {
  CHECK(betti(complete_graph(4)) == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(betti(complete_graph(5)) == 6);
  CHECK(betti(complete_graph(8)) == 21);

  const MultiGraph w3 = wheel(3);
  CHECK(w3.edge_count() == 6);
  for (Vertex v = 1; v <= 4; ++v) CHECK(w3.degree(v) == 3);
  CHECK(is_simple(w3));

  const MultiGraph w4 = wheel(4);
  CHECK(w4.vertex_count() == 5);
  CHECK(w4.edge_count() == 8);
  CHECK(w4.degree(5) == 4);
  CHECK(betti(wheel(6)) == 6);
  CHECK(w4.endpoints(EdgeRef{0}) == Edge{1, 2});
  CHECK(w4.endpoints(EdgeRef{4}) == Edge{5, 1});
  CHECK_THROWS(wheel(2));

  const MultiGraph p = path({2, 3, 4, 5, 6, 7, 8, 1});
  CHECK(p.degree(2) == 1);
  CHECK(p.degree(1) == 1);
  for (Vertex v = 3; v <= 8; ++v) CHECK(p.degree(v) == 2);
  CHECK_THROWS(path({1, 1, 2}));

  CHECK(petersen().edge_count() == 15);
  CHECK(is_regular(petersen(), 3));
  CHECK(girth(petersen()) == 5);
}

TEST_CASE("degree sum and twin involution on the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(degree_sum(e.graph) == static_cast<int>(2 * e.graph.edge_count()));
    for (Dart d = 0; d < static_cast<Dart>(e.graph.dart_count()); ++d) {
      CHECK(twin(twin(d)) == d);
      CHECK(twin(d) != d);
      CHECK(edge_of(twin(d)) == edge_of(d));
    }
  }
}

TEST_CASE("subdivision") {
  auto [g, w] = subdivide_edge(wheel(3), EdgeRef{0});
  CHECK(w == 5);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 7);
  CHECK(betti(g) == betti(wheel(3)));
  CHECK(g.endpoints(EdgeRef{0}) == Edge{1, 5});
  CHECK(g.endpoints(EdgeRef{6}) == Edge{5, 2});

  auto [h, x] = subdivide_edge(wheel(5), EdgeRef{5});
  CHECK(h.degree(6) == 5);
  CHECK(h.degree(x) == 2);
  CHECK_THROWS(subdivide_edge(wheel(3), EdgeRef{6}));
}

TEST_CASE("minors") {
  const MultiGraph k4 = complete_graph(4);
  for (std::size_t e = 0; e < k4.edge_count(); ++e) {
    const MultiGraph c = contract_edge(k4, EdgeRef{e});
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge_count() == 5);
    CHECK_FALSE(is_simple(c));
  }
  const MultiGraph loop = build_graph(2, {{1, 1}, {1, 2}});
  CHECK(contract_edge(loop, EdgeRef{0}).edge_count() == 1);

  const MultiGraph tree = path({1, 2, 3, 4});
  CHECK_FALSE(is_connected(delete_edge(tree, EdgeRef{1})));
  CHECK(components(delete_edge(tree, EdgeRef{1})).size() == 2);

  const MultiGraph c5 = cycle(5);
  CHECK(betti(delete_edge(c5, EdgeRef{2})) == betti(c5) - 1);

  const MultiGraph dv = delete_vertex(complete_graph(5), 3);
  CHECK(dv.vertex_count() == 4);
  CHECK(dv.edge_count() == 6);
  CHECK_THROWS(delete_vertex(complete_graph(3), 4));

  const Vertex drop[] = {2, 4};
  const Subgraph s = delete_vertices(complete_graph(5), drop);
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.old_label == std::vector<Vertex>{0, 1, 3, 5});
  CHECK(s.new_label[4] == 0);
  CHECK(s.new_label[5] == 3);
}

TEST_CASE("contracting a spanning tree leaves a bouquet of betti loops") {
  for (const auto& e : catalog()) {
    if (!is_connected(e.graph)) continue;
    CAPTURE(e.name);
    MultiGraph g = e.graph;
    const int beta = betti(g);
    // Contract tree edges one at a time; indices shift, so recompute the tree.
    while (g.vertex_count() > 1) {
      const SpanningTree t = spanning_tree(g);
      g = contract_edge(g, t.tree_edges.front());
    }
    CHECK(static_cast<int>(g.edge_count()) == beta);
    for (std::size_t i = 0; i < g.edge_count(); ++i) CHECK(g.is_loop(EdgeRef{i}));
  }
}

TEST_CASE("invariants") {
  CHECK(girth(complete_graph(4)) == 3);
  CHECK_FALSE(girth(path({1, 2, 3})).has_value());
  CHECK(girth(build_graph(2, {{1, 2}, {1, 2}})) == 2);
  CHECK(girth(build_graph(1, {{1, 1}})) == 1);
  CHECK(girth(cube()) == 4);
  CHECK(min_degree(wheel(5)) == 3);
  CHECK_THROWS(betti(build_graph(2, {})));
  CHECK(vertex_connectivity(petersen(), 3) == 3);
  CHECK(vertex_connectivity(cycle(6), 3) == 2);
  CHECK(vertex_connectivity(path({1, 2, 3}), 3) == 1);
  CHECK(vertex_connectivity(complete_graph(4), 5) == 3);
}

TEST_CASE("spanning trees") {
  for (const auto& e : catalog()) {
    if (!is_connected(e.graph)) continue;
    CAPTURE(e.name);
    const SpanningTree t = spanning_tree(e.graph);
    CHECK(static_cast<int>(t.co_tree_edges.size()) == betti(e.graph));
    CHECK(static_cast<int>(t.tree_edges.size()) == e.graph.vertex_count() - 1);
    std::mt19937_64 rng(7);
    const SpanningTree r = random_spanning_tree(e.graph, rng);
    CHECK(static_cast<int>(r.co_tree_edges.size()) == betti(e.graph));
    CHECK_NOTHROW(make_spanning_tree(e.graph, r.tree_edges));
  }
  const SpanningTree bfs = spanning_tree(wheel(4));
  CHECK(bfs.tree_edges == std::vector<EdgeRef>{{0}, {1}, {3}, {4}});
  CHECK_THROWS(make_spanning_tree(cycle(3), {EdgeRef{0}}));
  CHECK_THROWS(make_spanning_tree(build_graph(2, {{1, 2}, {1, 2}}), {EdgeRef{0}, EdgeRef{1}}));
}

TEST_CASE("independent sets") {
  const auto k4 = independent_sets(complete_graph(4), 4);
  CHECK(k4.size() == 5);
  CHECK(k4.front().empty());
  for (std::size_t i = 1; i < k4.size(); ++i) CHECK(k4[i].size() == 1);

  // Independent sets of C5 of size <= 2: empty, 5 singletons, 5 non-adjacent pairs.
  CHECK(independent_sets(cycle(5), 5).size() == 11);

  const auto sets = independent_sets(petersen(), 4);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  for (const auto& s : sets) CHECK(is_independent(petersen(), s));

  const MultiGraph looped = build_graph(2, {{1, 1}, {1, 2}});
  CHECK(independent_sets(looped, 2).size() == 2);

  const Vertex a[] = {1};
  CHECK(connected_without(complete_graph(4), a));
  const Vertex mid[] = {2};
  CHECK_FALSE(connected_without(path({1, 2, 3}), mid));
  CHECK(closed_neighborhood(cycle(5), a) == std::vector<Vertex>{1, 2, 5});
}
