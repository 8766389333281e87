#pragma once

// Lower bounds on maximum genus through independent sets, the independence
// bound for cubic graphs, and the girth/connectivity formulas they
// are compared against.

#include <optional>
#include <vector>

#include "genuslab/config.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/numeric.hpp"

namespace genuslab {

/// An independent set J with G - J connected.
struct NsisResult {
  std::vector<Vertex> set;
  int size() const { return static_cast<int>(set.size()); }
};

/// Exhaustive branch-and-bound; ties resolve to the lexicographically least set.
/// Throws BudgetExceeded above `vertex_budget` vertices.
NsisResult max_nsis(const MultiGraph& g, int vertex_budget = 24);

/// Maximum independent set by branch-and-bound (vertices with loops excluded).
std::vector<Vertex> maximum_independent_set(const MultiGraph& g, int vertex_budget = 40);
int independence_number(const MultiGraph& g, int vertex_budget = 40);

struct Lemma31Report {
  int max_genus = 0;
  NsisResult nsis;
  bool holds() const { return max_genus == nsis.size(); }
};

/// Maximum genus and maximum NSIS of a connected 3-regular graph.
Lemma31Report lemma31_check(const MultiGraph& g, const RunConfig& config = {});

struct BoundReport {
  BigRational bound_value;
  std::vector<Vertex> witness;
  std::vector<int> epsilon;             // per witness vertex: 1 for odd degree, 2 for even
  int residual_max_genus = 0;           // of G - witness, by brute force
  std::optional<int> oracle_value;      // brute-force maximum genus of G when in budget
};

/// (1/2) sum (d(v) - eps(v)) + maxgenus(G - A). Requires minimum degree >= 3,
/// A independent and G - A connected; each violation is reported by name.
BoundReport theorem_b_bound(const MultiGraph& g, const std::vector<Vertex>& a, const RunConfig& config = {},
                            bool with_oracle = true);

/// Best Theorem B value over every admissible A with |A| <= size_cap.
BoundReport best_theorem_b(const MultiGraph& g, int size_cap, const RunConfig& config = {});

struct ChainStage {
  std::vector<Vertex> set;            // labels in the original graph
  BigRational half_sum;               // (1/2) sum over the set of (d_{G_{i-1}}(v) - 1)
  int betti = 0;                      // of G_i
  std::optional<bool> upper_embeddable;  // of G_i, when in budget
};

struct ChainReport {
  std::vector<ChainStage> stages;
  BigRational bound_value;            // telescoped lower bound on maxgenus(G)
  int residual_max_genus = 0;         // maxgenus(G_s)
  bool propagated_upper_embeddable = false;
  std::optional<int> oracle_value;
  std::optional<bool> oracle_upper_embeddable;
};

/// Sets A_1..A_s in original labels: disjoint, independent, each vertex odd in
/// G_{i-1}, each G_i = G_{i-1} - A_i connected. Violations name the stage.
ChainReport theorem_c_bound(const MultiGraph& g, const std::vector<std::vector<Vertex>>& sets,
                            const RunConfig& config = {}, bool with_oracle = true);

struct TheoremDReport {
  NsisResult witness;
  std::vector<Vertex> closed_neighborhood;
  int max_genus = 0;     // brute force; equals |A| on cubic graphs
  int alpha_rest = 0;    // independence number of G - N_A
  int bound_value = 0;   // max_genus + alpha_rest
  int alpha = 0;         // independence number of G
  bool holds() const { return bound_value <= alpha; }
};

/// `a` must be a maximum NSIS of the connected cubic graph g.
TheoremDReport theorem_d_bound(const MultiGraph& g, const NsisResult& a, const RunConfig& config = {});

/// sum over v of 1 / (d(v) + 1).
BigRational caro_wei_bound(const MultiGraph& g);

/// Girth/connectivity table for girth in {3..10, 12}, connectivity in {1, 2, 3}.
BigRational li_liu_bound(int beta, int girth, int connectivity);

/// f_k(delta, g) for k in {1, 2, 3}, delta >= 3.
BigRational ouyang_factor(int k, int min_degree, int girth);
/// f_k(delta, g) * (beta + 1), before taking the minimum with floor(beta / 2).
BigRational ouyang_bound_raw(int beta, int min_degree, int girth, int k);
BigRational ouyang_bound(int beta, int min_degree, int girth, int k);

}  // namespace genuslab
