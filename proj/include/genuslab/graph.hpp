#pragma once

// Multigraph core: vertices are 1-based, every edge owns two darts.
// Dart 2e sits at the first endpoint of edge e and dart 2e+1 at the second,
// so the pairing involution is d ^ 1 and loops/parallel edges need no
// special casing anywhere downstream.

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace genuslab {

using Vertex = int;
using Dart = int;

struct EdgeRef {
  std::size_t index = 0;
  friend bool operator==(EdgeRef, EdgeRef) = default;
};

inline constexpr Dart twin(Dart d) noexcept { return d ^ 1; }
inline constexpr std::size_t edge_of(Dart d) noexcept { return static_cast<std::size_t>(d) >> 1; }
inline constexpr int end_of(Dart d) noexcept { return d & 1; }
inline constexpr Dart dart_of(std::size_t edge, int end) noexcept {
  return static_cast<Dart>(2 * edge) + end;
}

using Edge = std::pair<Vertex, Vertex>;

class MultiGraph {
 public:
  /// Throws std::invalid_argument if n < 1 or an endpoint is outside 1..n.
  MultiGraph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t dart_count() const noexcept { return 2 * edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Edge endpoints(EdgeRef e) const;
  Vertex owner(Dart d) const;

  /// Darts owned by v in increasing id order; a loop contributes both.
  std::span<const Dart> darts_at(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(darts_at(v).size()); }

  bool is_loop(EdgeRef e) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Distinct neighbours of v in increasing order (v itself if it has a loop).
  std::vector<Vertex> neighbors(Vertex v) const;

  void check_vertex(Vertex v) const;
  void check_edge(EdgeRef e) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> incidence_;  // index v-1
};

struct SpanningTree {
  std::vector<EdgeRef> tree_edges;     // increasing index
  std::vector<EdgeRef> co_tree_edges;  // increasing index; these become a_1..a_beta
  std::vector<bool> in_tree;           // indexed by edge

  bool contains(EdgeRef e) const { return in_tree.at(e.index); }
};

struct Subgraph {
  MultiGraph graph;
  std::vector<Vertex> new_label;  // indexed by old vertex; 0 when removed
  std::vector<Vertex> old_label;  // indexed by new vertex
};

// --- construction --------------------------------------------------------

MultiGraph build_graph(int n, std::vector<Edge> edges);
MultiGraph complete_graph(int m);
MultiGraph complete_bipartite(int a, int b);
MultiGraph cycle(int n);
/// Path visiting `order` in sequence; order must be a permutation of 1..n.
MultiGraph path(const std::vector<Vertex>& order);
/// Rim vertices 1..n, center n+1; rim edge i = (i, i%n+1) has index i-1,
/// spoke i = (n+1, i) has index n+i-1.
MultiGraph wheel(int n);
MultiGraph prism(int n);
MultiGraph petersen();

// --- minors ----------------------------------------------------------------

/// Replaces e = (u, v) by (u, w) at the same index and appends (w, v); w = n+1.
std::pair<MultiGraph, Vertex> subdivide_edge(const MultiGraph& g, EdgeRef e);
/// Identifies the endpoints of e into the smaller label; loops are simply
/// deleted. Parallel edges and loops produced by the identification are kept.
MultiGraph contract_edge(const MultiGraph& g, EdgeRef e);
MultiGraph delete_edge(const MultiGraph& g, EdgeRef e);
MultiGraph delete_vertex(const MultiGraph& g, Vertex v);
/// Removes `vs` and renumbers the survivors in increasing order. At least one
/// vertex must survive.
Subgraph delete_vertices(const MultiGraph& g, std::span<const Vertex> vs);

// --- invariants --------------------------------------------------------------

bool is_connected(const MultiGraph& g);
/// Vertex sets of the connected components, each sorted, ordered by least member.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);
/// E - V + 1; requires a connected graph.
int betti(const MultiGraph& g);
/// Length of a shortest cycle; nullopt for forests. Loops give 1, parallel edges 2.
std::optional<int> girth(const MultiGraph& g);
int min_degree(const MultiGraph& g);
bool is_regular(const MultiGraph& g, int d);
bool is_simple(const MultiGraph& g);
/// Minimum number of vertices whose removal disconnects g or leaves one vertex,
/// searched up to `cap` (returns cap when at least that connected).
int vertex_connectivity(const MultiGraph& g, int cap);

/// Breadth-first from `root`, neighbours taken by vertex label then edge index.
SpanningTree spanning_tree(const MultiGraph& g, Vertex root = 1);
/// Kruskal over a uniformly shuffled edge order.
SpanningTree random_spanning_tree(const MultiGraph& g, std::mt19937_64& rng);
/// Validates that `tree_edges` spans g without cycles and fills in the rest.
SpanningTree make_spanning_tree(const MultiGraph& g, std::vector<EdgeRef> tree_edges);

bool is_independent(const MultiGraph& g, std::span<const Vertex> vs);
/// Connectivity of g - removed; an empty remainder counts as connected.
bool connected_without(const MultiGraph& g, std::span<const Vertex> removed);
/// Closed neighbourhood of vs (vs together with all neighbours), sorted.
std::vector<Vertex> closed_neighborhood(const MultiGraph& g, std::span<const Vertex> vs);

/// Calls `visit` for every independent set of size <= max_size, starting with
/// the empty set, in lexicographic order of the sorted member lists.
/// Returning false from `visit` stops the enumeration.
void for_each_independent_set(const MultiGraph& g, int max_size,
                              const std::function<bool(const std::vector<Vertex>&)>& visit);
std::vector<std::vector<Vertex>> independent_sets(const MultiGraph& g, int max_size);

}  // namespace genuslab
