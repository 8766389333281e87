#include "genuslab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace genuslab {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Connectivity of the subgraph induced by the vertices with alive[v] set.
// No surviving vertex counts as connected.
bool alive_connected(const MultiGraph& g, const std::vector<bool>& alive) {
  const int n = g.vertex_count();
  Vertex start = 0;
  int alive_count = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (alive[v]) {
      ++alive_count;
      if (start == 0) start = v;
    }
  }
  if (alive_count <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_at(v)) {
      const Vertex w = g.owner(twin(d));
      if (alive[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive_count;
}

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  incidence_.resize(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has endpoint outside 1.." +
                                  std::to_string(n));
    }
    incidence_[u - 1].push_back(dart_of(e, 0));
    incidence_[v - 1].push_back(dart_of(e, 1));
  }
}

void MultiGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void MultiGraph::check_edge(EdgeRef e) const {
  if (e.index >= edges_.size()) {
    throw std::invalid_argument("edge " + std::to_string(e.index) + " out of range");
  }
}

Edge MultiGraph::endpoints(EdgeRef e) const {
  check_edge(e);
  return edges_[e.index];
}

Vertex MultiGraph::owner(Dart d) const {
  const auto& [u, v] = edges_.at(edge_of(d));
  return end_of(d) == 0 ? u : v;
}

std::span<const Dart> MultiGraph::darts_at(Vertex v) const {
  check_vertex(v);
  return incidence_[v - 1];
}

bool MultiGraph::is_loop(EdgeRef e) const {
  const auto [u, v] = endpoints(e);
  return u == v;
}

bool MultiGraph::adjacent(Vertex u, Vertex v) const {
  for (Dart d : darts_at(u)) {
    if (owner(twin(d)) == v) return true;
  }
  return false;
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Dart d : darts_at(v)) out.push_back(owner(twin(d)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiGraph build_graph(int n, std::vector<Edge> edges) { return MultiGraph(n, std::move(edges)); }

MultiGraph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete_graph needs m >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= m; ++u)
    for (Vertex v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
  return MultiGraph(m, std::move(edges));
}

MultiGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs both sides nonempty");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= a; ++u)
    for (Vertex v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
  return MultiGraph(a + b, std::move(edges));
}

MultiGraph cycle(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  return MultiGraph(n, std::move(edges));
}

MultiGraph path(const std::vector<Vertex>& order) {
  if (order.empty()) throw std::invalid_argument("path needs a nonempty vertex sequence");
  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : order) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("path order must be a permutation of 1..n");
    }
    seen[v] = true;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.emplace_back(order[i], order[i + 1]);
  return MultiGraph(n, std::move(edges));
}

MultiGraph wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel needs at least 3 spokes");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(n + 1, v);
  return MultiGraph(n + 1, std::move(edges));
}

MultiGraph prism(int n) {
  if (n < 3) throw std::invalid_argument("prism needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(n + v, n + v % n + 1);
  for (Vertex v = 1; v <= n; ++v) edges.emplace_back(v, n + v);
  return MultiGraph(2 * n, std::move(edges));
}

MultiGraph petersen() {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 5; ++v) edges.emplace_back(v, v % 5 + 1);
  for (Vertex v = 1; v <= 5; ++v) edges.emplace_back(v, v + 5);
  for (Vertex v = 0; v < 5; ++v) edges.emplace_back(6 + v, 6 + (v + 2) % 5);
  return MultiGraph(10, std::move(edges));
}

std::pair<MultiGraph, Vertex> subdivide_edge(const MultiGraph& g, EdgeRef e) {
  g.check_edge(e);
  auto edges = g.edges();
  const Vertex w = g.vertex_count() + 1;
  const auto [u, v] = edges[e.index];
  edges[e.index] = {u, w};
  edges.emplace_back(w, v);
  return {MultiGraph(w, std::move(edges)), w};
}

MultiGraph contract_edge(const MultiGraph& g, EdgeRef e) {
  g.check_edge(e);
  const auto [a, b] = g.endpoints(e);
  if (a == b) return delete_edge(g, e);
  const Vertex keep = std::min(a, b);
  const Vertex gone = std::max(a, b);
  auto relabel = [&](Vertex x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e.index) continue;
    const auto [u, v] = g.edges()[i];
    edges.emplace_back(relabel(u), relabel(v));
  }
  return MultiGraph(g.vertex_count() - 1, std::move(edges));
}

MultiGraph delete_edge(const MultiGraph& g, EdgeRef e) {
  g.check_edge(e);
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e.index));
  return MultiGraph(g.vertex_count(), std::move(edges));
}

MultiGraph delete_vertex(const MultiGraph& g, Vertex v) {
  const Vertex vs[] = {v};
  return delete_vertices(g, vs).graph;
}

Subgraph delete_vertices(const MultiGraph& g, std::span<const Vertex> vs) {
  const int n = g.vertex_count();
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : vs) {
    g.check_vertex(v);
    removed[v] = true;
  }
  std::vector<Vertex> new_label(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> old_label{0};
  for (Vertex v = 1; v <= n; ++v) {
    if (removed[v]) continue;
    old_label.push_back(v);
    new_label[v] = static_cast<Vertex>(old_label.size()) - 1;
  }
  if (old_label.size() == 1) throw std::invalid_argument("cannot delete every vertex");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!removed[u] && !removed[v]) edges.emplace_back(new_label[u], new_label[v]);
  }
  const int remaining = static_cast<int>(old_label.size()) - 1;
  return {MultiGraph(remaining, std::move(edges)), std::move(new_label), std::move(old_label)};
}

bool is_connected(const MultiGraph& g) {
  std::vector<bool> alive(static_cast<std::size_t>(g.vertex_count()) + 1, true);
  return alive_connected(g, alive);
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Dart d : g.darts_at(v)) {
        const Vertex w = g.owner(twin(d));
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int betti(const MultiGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("betti number requires a connected graph");
  return static_cast<int>(g.edge_count()) - g.vertex_count() + 1;
}

std::optional<int> girth(const MultiGraph& g) {
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(EdgeRef{e})) return 1;
  std::optional<int> best;
  const int n = g.vertex_count();
  // BFS from every vertex; a non-tree edge closing at depths du, dv gives a
  // closed walk of length du + dv + 1 containing a cycle no longer than it,
  // and the minimum over all roots is exact.
  for (Vertex root = 1; root <= n; ++root) {
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::size_t> via(static_cast<std::size_t>(n) + 1, SIZE_MAX);
    std::deque<Vertex> queue{root};
    depth[root] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Dart d : g.darts_at(v)) {
        const std::size_t e = edge_of(d);
        if (e == via[v]) continue;
        const Vertex w = g.owner(twin(d));
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          const int len = depth[v] + depth[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

int min_degree(const MultiGraph& g) {
  int best = g.degree(1);
  for (Vertex v = 2; v <= g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_regular(const MultiGraph& g, int d) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

bool is_simple(const MultiGraph& g) {
  std::vector<Edge> seen;
  for (auto [u, v] : g.edges()) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    seen.emplace_back(u, v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

int vertex_connectivity(const MultiGraph& g, int cap) {
  const int n = g.vertex_count();
  for (int k = 0; k < cap; ++k) {
    if (k >= n - 1) return k;
    // Try every k-subset for removal.
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      std::vector<bool> alive(static_cast<std::size_t>(n) + 1, true);
      alive[0] = false;
      for (int v : pick) alive[v] = false;
      if (!alive_connected(g, alive)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return cap;
}

SpanningTree make_spanning_tree(const MultiGraph& g, std::vector<EdgeRef> tree_edges) {
  if (static_cast<int>(tree_edges.size()) != g.vertex_count() - 1) {
    throw std::invalid_argument("spanning tree must have V-1 edges");
  }
  DisjointSets sets(g.vertex_count() + 1);
  SpanningTree t;
  t.in_tree.assign(g.edge_count(), false);
  for (EdgeRef e : tree_edges) {
    const auto [u, v] = g.endpoints(e);
    if (t.in_tree[e.index] || !sets.unite(u, v)) {
      throw std::invalid_argument("tree edges contain a cycle");
    }
    t.in_tree[e.index] = true;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    (t.in_tree[e] ? t.tree_edges : t.co_tree_edges).push_back(EdgeRef{e});
  }
  return t;
}

SpanningTree spanning_tree(const MultiGraph& g, Vertex root) {
  g.check_vertex(root);
  if (!is_connected(g)) throw std::invalid_argument("spanning tree requires a connected graph");
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<EdgeRef> chosen;
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    std::vector<std::pair<Vertex, std::size_t>> out;
    for (Dart d : g.darts_at(v)) out.emplace_back(g.owner(twin(d)), edge_of(d));
    std::sort(out.begin(), out.end());
    for (const auto& [w, e] : out) {
      if (seen[w]) continue;
      seen[w] = true;
      chosen.push_back(EdgeRef{e});
      queue.push_back(w);
    }
  }
  return make_spanning_tree(g, std::move(chosen));
}

SpanningTree random_spanning_tree(const MultiGraph& g, std::mt19937_64& rng) {
  if (!is_connected(g)) throw std::invalid_argument("spanning tree requires a connected graph");
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  DisjointSets sets(g.vertex_count() + 1);
  std::vector<EdgeRef> chosen;
  for (std::size_t e : order) {
    const auto [u, v] = g.edges()[e];
    if (sets.unite(u, v)) chosen.push_back(EdgeRef{e});
  }
  return make_spanning_tree(g, std::move(chosen));
}

bool is_independent(const MultiGraph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool connected_without(const MultiGraph& g, std::span<const Vertex> removed) {
  std::vector<bool> alive(static_cast<std::size_t>(g.vertex_count()) + 1, true);
  alive[0] = false;
  for (Vertex v : removed) {
    g.check_vertex(v);
    alive[v] = false;
  }
  return alive_connected(g, alive);
}

std::vector<Vertex> closed_neighborhood(const MultiGraph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  for (Vertex v : vs)
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_independent_set(const MultiGraph& g, int max_size,
                              const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.vertex_count();
  std::vector<Vertex> current;
  bool stopped = false;
  std::function<void(Vertex)> extend = [&](Vertex from) {
    if (stopped) return;
    if (!visit(current)) {
      stopped = true;
      return;
    }
    if (static_cast<int>(current.size()) >= max_size) return;
    for (Vertex v = from; v <= n && !stopped; ++v) {
      bool ok = !g.adjacent(v, v);
      for (Vertex u : current) ok = ok && !g.adjacent(u, v);
      if (!ok) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(1);
}

std::vector<std::vector<Vertex>> independent_sets(const MultiGraph& g, int max_size) {
  std::vector<std::vector<Vertex>> out;
  for_each_independent_set(g, max_size, [&](const std::vector<Vertex>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace genuslab
