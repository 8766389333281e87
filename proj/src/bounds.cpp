#include "genuslab/bounds.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "genuslab/embedding.hpp"
#include "genuslab/errors.hpp"

namespace genuslab {

namespace {

void require_connected_cubic(const MultiGraph& g, const char* who) {
  if (!is_connected(g) || !is_regular(g, 3)) {
    throw std::invalid_argument(std::string(who) + " needs a connected 3-regular graph");
  }
}

std::optional<int> max_genus_if_affordable(const MultiGraph& g, const RunConfig& config) {
  if (RotationEnumerator::count_for(g) > config.enumeration_budget) return std::nullopt;
  return max_genus_bruteforce(g, config);
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "{" + out + "}";
}

}  // namespace

NsisResult max_nsis(const MultiGraph& g, int vertex_budget) {
  const int n = g.vertex_count();
  if (n > vertex_budget) throw BudgetExceeded("NSIS search", BigInt(1) << n, std::uint64_t{1} << vertex_budget);
  if (!is_connected(g)) throw std::invalid_argument("max_nsis needs a connected graph");
  NsisResult best;
  std::vector<Vertex> current;
  std::vector<bool> blocked(static_cast<std::size_t>(n) + 1, false);
  std::function<void(Vertex)> search = [&](Vertex v) {
    if (static_cast<int>(current.size()) + (n - v + 1) <= best.size()) return;
    if (v > n) {
      if (connected_without(g, current)) best.set = current;
      return;
    }
    if (!blocked[v] && !g.adjacent(v, v)) {
      std::vector<Vertex> newly;
      for (Vertex w : g.neighbors(v)) {
        if (!blocked[w]) {
          blocked[w] = true;
          newly.push_back(w);
        }
      }
      current.push_back(v);
      search(v + 1);
      current.pop_back();
      for (Vertex w : newly) blocked[w] = false;
    }
    search(v + 1);
  };
  search(1);
  return best;
}

std::vector<Vertex> maximum_independent_set(const MultiGraph& g, int vertex_budget) {
  const int n = g.vertex_count();
  if (n > vertex_budget) {
    throw BudgetExceeded("independent set search", BigInt(1) << n, std::uint64_t{1} << std::min(vertex_budget, 63));
  }
  std::vector<Vertex> best, current;
  std::vector<int> blocked(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(Vertex)> search = [&](Vertex v) {
    if (current.size() + static_cast<std::size_t>(n - v + 1) <= best.size()) return;
    if (v > n) {
      best = current;
      return;
    }
    if (blocked[v] == 0 && !g.adjacent(v, v)) {
      const auto nbrs = g.neighbors(v);
      for (Vertex w : nbrs) ++blocked[w];
      current.push_back(v);
      search(v + 1);
      current.pop_back();
      for (Vertex w : nbrs) --blocked[w];
    }
    search(v + 1);
  };
  search(1);
  return best;
}

int independence_number(const MultiGraph& g, int vertex_budget) {
  return static_cast<int>(maximum_independent_set(g, vertex_budget).size());
}

Lemma31Report lemma31_check(const MultiGraph& g, const RunConfig& config) {
  require_connected_cubic(g, "lemma31_check");
  return Lemma31Report{max_genus_bruteforce(g, config), max_nsis(g)};
}

BoundReport theorem_b_bound(const MultiGraph& g, const std::vector<Vertex>& a, const RunConfig& config,
                            bool with_oracle) {
  if (!is_connected(g)) throw std::invalid_argument("theorem B: G is not connected");
  if (min_degree(g) < 3) throw std::invalid_argument("theorem B: minimum degree of G is below 3");
  for (Vertex v : a) g.check_vertex(v);
  if (!is_independent(g, a)) throw std::invalid_argument("theorem B: A = " + join(a) + " is not independent");
  if (!connected_without(g, a)) throw std::invalid_argument("theorem B: G - A is not connected");

  BoundReport out;
  out.witness = a;
  long twice = 0;
  for (Vertex v : a) {
    const int d = g.degree(v);
    const int eps = d % 2 == 1 ? 1 : 2;
    out.epsilon.push_back(eps);
    twice += d - eps;
  }
  out.residual_max_genus = max_genus_bruteforce(delete_vertices(g, a).graph, config);
  out.bound_value = BigRational(twice, 2) + out.residual_max_genus;
  if (with_oracle) out.oracle_value = max_genus_if_affordable(g, config);
  return out;
}

BoundReport best_theorem_b(const MultiGraph& g, int size_cap, const RunConfig& config) {
  std::optional<BoundReport> best;
  for_each_independent_set(g, size_cap, [&](const std::vector<Vertex>& a) {
    if (!connected_without(g, a) || static_cast<int>(a.size()) == g.vertex_count()) return true;
    BoundReport r = theorem_b_bound(g, a, config, false);
    if (!best || r.bound_value > best->bound_value) best = std::move(r);
    return true;
  });
  if (!best) throw std::invalid_argument("theorem B: no admissible independent set");
  best->oracle_value = max_genus_if_affordable(g, config);
  return *best;
}

ChainReport theorem_c_bound(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets,
                            const RunConfig& config, bool with_oracle) {
  if (!is_connected(g)) throw std::invalid_argument("theorem C: G is not connected");
  ChainReport out;
  MultiGraph current = g;
  std::vector<Vertex> to_current(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) to_current[v] = v;
  BigRational total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string stage = "theorem C stage " + std::to_string(i + 1) + ": ";
    std::vector<Vertex> local;
    long twice = 0;
    for (Vertex v : sets[i]) {
      g.check_vertex(v);
      const Vertex lv = to_current[v];
      if (lv == 0 || std::find(local.begin(), local.end(), lv) != local.end()) {
        throw std::invalid_argument(stage + "vertex " + std::to_string(v) + " already removed (sets must be disjoint)");
      }
      const int d = current.degree(lv);
      if (d % 2 == 0) {
        throw std::invalid_argument(stage + "vertex " + std::to_string(v) + " has even degree " +
                                    std::to_string(d) + " in G_" + std::to_string(i));
      }
      local.push_back(lv);
      twice += d - 1;
    }
    if (!is_independent(current, local)) throw std::invalid_argument(stage + join(sets[i]) + " is not independent");
    if (static_cast<int>(local.size()) == current.vertex_count() || !connected_without(current, local)) {
      throw std::invalid_argument(stage + "G_" + std::to_string(i + 1) + " is not connected");
    }
    Subgraph next = delete_vertices(current, local);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      if (to_current[v] != 0) to_current[v] = next.new_label[to_current[v]];
    }
    current = std::move(next.graph);
    ChainStage st;
    st.set = sets[i];
    st.half_sum = BigRational(twice, 2);
    st.betti = betti(current);
    if (RotationEnumerator::count_for(current) <= config.enumeration_budget) {
      st.upper_embeddable = is_upper_embeddable(current, config);
      out.propagated_upper_embeddable = out.propagated_upper_embeddable || *st.upper_embeddable;
    }
    total += st.half_sum;
    out.stages.push_back(std::move(st));
  }
  out.residual_max_genus = max_genus_bruteforce(current, config);
  out.bound_value = total + out.residual_max_genus;
  if (with_oracle) {
    out.oracle_value = max_genus_if_affordable(g, config);
    if (out.oracle_value) out.oracle_upper_embeddable = *out.oracle_value == betti(g) / 2;
  }
  return out;
}

TheoremDReport theorem_d_bound(const MultiGraph& g, const NsisResult& a, const RunConfig& config) {
  require_connected_cubic(g, "theorem D");
  if (!is_independent(g, a.set) || !connected_without(g, a.set)) {
    throw std::invalid_argument("theorem D: witness is not a non-separating independent set");
  }
  if (a.size() != max_nsis(g).size()) throw std::invalid_argument("theorem D: witness is not a maximum NSIS");
  TheoremDReport out;
  out.witness = a;
  out.closed_neighborhood = closed_neighborhood(g, a.set);
  if (static_cast<int>(out.closed_neighborhood.size()) < g.vertex_count()) {
    out.alpha_rest = independence_number(delete_vertices(g, out.closed_neighborhood).graph);
  }
  out.max_genus = max_genus_bruteforce(g, config);
  out.bound_value = out.max_genus + out.alpha_rest;
  out.alpha = independence_number(g);
  return out;
}

BigRational caro_wei_bound(const MultiGraph& g) {
  BigRational sum = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) sum += BigRational(1, g.degree(v) + 1);
  return sum;
}

BigRational li_liu_bound(int beta, int girth, int connectivity) {
  struct Entry {
    int coefficient, constant, denominator;
  };
  static constexpr std::array<int, 9> girths{3, 4, 5, 6, 7, 8, 9, 10, 12};
  // (coefficient * beta + constant) / denominator; rows are connectivity 1..3.
  static constexpr std::array<std::array<Entry, 9>, 3> table{{
      {{{1, 2, 3}, {1, 2, 4}, {2, 2, 5}, {3, 2, 6}, {5, 2, 7}, {7, 2, 8}, {14, 2, 9}, {17, 2, 10}, {31, 2, 12}}},
      {{{1, 2, 4}, {1, 2, 5}, {2, 3, 6}, {3, 4, 7}, {6, 7, 8}, {7, 8, 9}, {14, 15, 10}, {17, 18, 11}, {31, 32, 12}}},
      {{{1, 2, 3}, {3, 4, 7}, {5, 6, 11}, {7, 8, 15}, {11, 12, 23}, {15, 16, 31}, {29, 30, 59}, {35, 36, 71},
        {63, 64, 127}}},
  }};
  const auto col = std::find(girths.begin(), girths.end(), girth);
  if (col == girths.end() || connectivity < 1 || connectivity > 3) {
    throw std::invalid_argument("li_liu_bound: (girth " + std::to_string(girth) + ", connectivity " +
                                std::to_string(connectivity) + ") is not tabulated");
  }
  const Entry e = table[connectivity - 1][static_cast<std::size_t>(col - girths.begin())];
  return BigRational(e.coefficient * beta + e.constant, e.denominator);
}

BigRational ouyang_factor(int k, int min_degree, int girth) {
  if (k < 1 || k > 3) throw std::invalid_argument("ouyang_factor: k must be 1, 2 or 3");
  if (min_degree < 3) throw std::invalid_argument("ouyang_factor: minimum degree must be at least 3");
  if (girth < 3) throw std::invalid_argument("ouyang_factor: girth of a simple graph is at least 3");
  // ceil(((delta - 2)(delta + g - 3) - 3) / 4); the numerator is >= 0 here.
  const int c = ((min_degree - 2) * (min_degree + girth - 3) - 3 + 3) / 4;
  const BigRational half(1, 2);
  if (k == 3) return half * (1 - BigRational(1, 4 * c + 3));
  if (min_degree == 3) return k == 1 ? BigRational(1, 4) : BigRational(1, 3);
  if (k == 1) return half * (1 - BigRational(3, 4 * c + 1));
  return half * (1 - BigRational(1, 2 * c + 1));
}

BigRational ouyang_bound_raw(int beta, int min_degree, int girth, int k) {
  return ouyang_factor(k, min_degree, girth) * (beta + 1);
}

BigRational ouyang_bound(int beta, int min_degree, int girth, int k) {
  return std::min(ouyang_bound_raw(beta, min_degree, girth, k), BigRational(beta / 2));
}

}  // namespace genuslab
