#include "genuslab/acceptance.hpp"

#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "genuslab/bounds.hpp"
#include "genuslab/catalog.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/joint_tree.hpp"
#include "genuslab/km.hpp"
#include "genuslab/near_wheel.hpp"
#include "genuslab/surface_word.hpp"

namespace genuslab {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

int beta_complete(int m) { return m * (m - 1) / 2 - m + 1; }

Outcome result4_census(const RunConfig& config) {
  Outcome o;
  const auto replay = replay_schedule(builtin_schedule(5));
  o.require(replay.count.value == 432, "K5 count is " + replay.count.value.str());
  const auto census = enumerate_placements(builtin_schedule(5), config);
  o.require(census.replays == 432 && census.distinct_rotations == 432,
            "census " + std::to_string(census.replays) + " replays, " + std::to_string(census.distinct_rotations) +
                " distinct");
  o.require(census.genus_counts.size() == 1 && census.genus_counts.begin()->first == 3, "census genus not all 3");
  if (o.passed) o.detail << "432 replays, 432 distinct rotation systems, all genus 3";
  return o;
}

Outcome schedule_counts(const RunConfig&) {
  Outcome o;
  const std::map<std::uint64_t, unsigned> k8{{2, 26}, {3, 11}, {5, 5}};
  const std::map<std::uint64_t, unsigned> k9{{2, 27}, {3, 12}, {5, 7}, {7, 6}};
  const std::map<std::uint64_t, unsigned> k10{{2, 52}, {3, 15}, {5, 7}, {7, 6}};
  o.require(replay_schedule(builtin_schedule(6)).count.value == 663552, "K6 count");
  o.require(replay_schedule(builtin_schedule(7)).count.value == BigInt("49766400000"), "K7 count");
  o.require(replay_schedule(builtin_schedule(8)).count.prime_factorization == k8, "K8 factorization");
  o.require(replay_schedule(builtin_schedule(9)).count.prime_factorization == k9, "K9 factorization");
  o.require(replay_schedule(builtin_schedule(10)).count.prime_factorization == k10, "K10 factorization");
  if (o.passed) o.detail << "K6..K10 values and every recorded tuple match";
  return o;
}

Outcome final_faces(const RunConfig&) {
  Outcome o;
  for (int m = 5; m <= 10; ++m) {
    const auto r = replay_schedule(builtin_schedule(m));
    const int faces = static_cast<int>(trace_faces(r.embedding).size());
    const int beta = beta_complete(m);
    o.require(faces == (beta % 2 == 0 ? 1 : 2) && genus_of(r.embedding) == beta / 2,
              "K" + std::to_string(m) + ": F=" + std::to_string(faces) + " genus " +
                  std::to_string(genus_of(r.embedding)));
    if (o.passed) o.detail << "K" << m << " F=" << faces << " g=" << beta / 2 << (m < 10 ? ", " : "");
  }
  return o;
}

Outcome algorithm_runs(const RunConfig&) {
  Outcome o;
  for (int m : {5, 7, 8, 10}) {
    const auto run = run_paper_algorithm(m);
    o.require(run.succeeded && run.genus == beta_complete(m) / 2, "K" + std::to_string(m) + " not built");
  }
  for (int m : {6, 9}) {
    o.require(!run_paper_algorithm(m).succeeded, "K" + std::to_string(m) + " unexpectedly succeeded");
  }
  if (o.passed) o.detail << "built K5, K7, K8, K10 at maximum genus; K6, K9 reported stuck";
  return o;
}

Outcome near_wheel_sweep(const RunConfig& config) {
  Outcome o;
  std::size_t expected = 0;
  for (int n = 3; n <= 6; ++n) expected += attach_configurations(n).size();
  const auto report = verify_theorem_a(3, 6, config);
  o.require(report.checked.size() == expected, "checked " + std::to_string(report.checked.size()));
  o.require(report.ok(), std::to_string(report.mismatches.size()) + " mismatches");
  if (o.passed) o.detail << report.checked.size() << " configurations, 0 mismatches";
  return o;
}

std::vector<std::size_t> tree_key(const SpanningTree& t) {
  std::vector<std::size_t> key;
  for (EdgeRef e : t.tree_edges) key.push_back(e.index);
  return key;
}

Outcome joint_tree_correspondence(const RunConfig& config) {
  Outcome o;
  std::mt19937_64 rng(config.seed);
  int graphs = 0;
  long cases = 0;
  for (const auto& entry : catalog()) {
    const MultiGraph& g = entry.graph;
    if (!is_connected(g) || betti(g) == 0) continue;
    std::vector<SpanningTree> trees{spanning_tree(g)};
    std::set<std::vector<std::size_t>> seen{tree_key(trees.front())};
    for (int attempt = 0; attempt < 200 && trees.size() < 3; ++attempt) {
      SpanningTree t = random_spanning_tree(g, rng);
      if (seen.insert(tree_key(t)).second) trees.push_back(std::move(t));
    }
    if (trees.size() < 3) continue;
    ++graphs;
    for (const auto& t : trees) {
      for (int i = 0; i < 100; ++i) {
        const RotationSystem r = RotationSystem::random(g, rng);
        const int by_faces = genus_of(Embedding(g, r));
        const int by_word = reduce_to_standard(associated_surface(build_joint_tree(g, t, r))).genus;
        ++cases;
        o.require(by_faces == by_word, entry.name + ": face genus " + std::to_string(by_faces) + " vs word " +
                                           std::to_string(by_word));
      }
    }
  }
  o.require(graphs >= 10, "only " + std::to_string(graphs) + " graphs with 3 spanning trees");
  if (o.passed) o.detail << graphs << " graphs, " << cases << " cases, all equal";
  return o;
}

Outcome word_calculus(const RunConfig& config) {
  Outcome o;
  o.require(reduce_to_standard(parse_word("a a-")).genus == 0, "a a- is not genus 0");
  o.require(reduce_to_standard(parse_word("a b a- b-")).genus == 1, "a b a- b- is not genus 1");
  const auto r = reduce_to_standard(separated_spokes_word(6, 2, 2));
  o.require(r.genus == 1 && !r.trace.empty() && r.trace.back().word_after == "a1 y a1- y-",
            "constructed word chain does not end at a1 y a1- y-");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pairs(1, 8);
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto w = random_orientable_word(pairs(rng), rng);
    if (reduce_to_standard(w).genus != genus_oracle(w)) ++disagreements;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " random words disagree with the oracle");
  if (o.passed) o.detail << "fixed words, constructed word, 10000 random words agree";
  return o;
}

Outcome cubic_equality(const RunConfig& config) {
  Outcome o;
  int checked = 0;
  for (const auto& entry : catalog()) {
    const MultiGraph& g = entry.graph;
    if (g.vertex_count() > 10 || !is_connected(g) || !is_regular(g, 3)) continue;
    const auto rep = lemma31_check(g, config);
    ++checked;
    o.require(rep.holds(), entry.name + ": max genus " + std::to_string(rep.max_genus) + " vs NSIS " +
                               std::to_string(rep.nsis.size()));
  }
  o.require(checked >= 5, "only " + std::to_string(checked) + " cubic graphs checked");
  if (o.passed) o.detail << checked << " cubic graphs, equality everywhere";
  return o;
}

// All admissible stage sets of odd vertices of size <= cap in g.
std::vector<std::vector<Vertex>> odd_stage_sets(const MultiGraph& g, int cap) {
  std::vector<std::vector<Vertex>> out;
  for_each_independent_set(g, cap, [&](const std::vector<Vertex>& a) {
    if (a.empty() || static_cast<int>(a.size()) == g.vertex_count()) return true;
    for (Vertex v : a) {
      if (g.degree(v) % 2 == 0) return true;
    }
    if (connected_without(g, a)) out.push_back(a);
    return true;
  });
  return out;
}

Outcome soundness(const RunConfig& config) {
  Outcome o;
  long b_checks = 0, c_checks = 0, d_checks = 0, minor_checks = 0;
  for (const auto& entry : catalog()) {
    const MultiGraph& g = entry.graph;
    if (!is_connected(g) || RotationEnumerator::count_for(g) > config.enumeration_budget) continue;
    const int gamma_max = max_genus_bruteforce(g, config);

    if (min_degree(g) >= 3) {
      for_each_independent_set(g, 3, [&](const std::vector<Vertex>& a) {
        if (static_cast<int>(a.size()) == g.vertex_count() || !connected_without(g, a)) return true;
        const auto rep = theorem_b_bound(g, a, config, false);
        ++b_checks;
        o.require(rep.bound_value <= gamma_max, entry.name + ": theorem B exceeds max genus");
        return true;
      });
    }

    for (const auto& first : odd_stage_sets(g, 2)) {
      std::vector<std::vector<std::vector<Vertex>>> chains{{first}};
      const Subgraph rest = delete_vertices(g, first);
      for (const auto& second : odd_stage_sets(rest.graph, 2)) {
        std::vector<Vertex> original;
        for (Vertex v : second) original.push_back(rest.old_label[v]);
        chains.push_back({first, original});
      }
      for (const auto& chain : chains) {
        const auto rep = theorem_c_bound(g, chain, config, false);
        ++c_checks;
        o.require(rep.bound_value <= gamma_max, entry.name + ": theorem C exceeds max genus");
        o.require(!rep.propagated_upper_embeddable || 2 * gamma_max == betti(g) - betti(g) % 2,
                  entry.name + ": upper embeddability propagated to a graph that is not");
      }
    }

    if (is_regular(g, 3) && g.vertex_count() <= 24) {
      const auto rep = theorem_d_bound(g, max_nsis(g), config);
      ++d_checks;
      o.require(rep.holds(), entry.name + ": theorem D exceeds independence number");
    }

    const int gamma_min = min_genus_bruteforce(g, config);
    std::vector<MultiGraph> minors;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      minors.push_back(delete_edge(g, EdgeRef{e}));
      if (!g.is_loop(EdgeRef{e})) minors.push_back(contract_edge(g, EdgeRef{e}));
    }
    for (const auto& minor : minors) {
      if (RotationEnumerator::count_for(minor) > config.enumeration_budget) continue;
      ++minor_checks;
      o.require(min_genus_of_components(minor, config) <= gamma_min, entry.name + ": a minor has larger genus");
    }
  }
  if (o.passed) {
    o.detail << b_checks << " B, " << c_checks << " C, " << d_checks << " D, " << minor_checks
             << " minor checks, 0 violations";
  }
  return o;
}

Outcome comparison_arithmetic(const RunConfig&) {
  Outcome o;
  o.require(li_liu_bound(8, 3, 1) == BigRational(10, 3), "Li-Liu " + to_string(li_liu_bound(8, 3, 1)));
  o.require(ouyang_bound(8, 3, 3, 2) == 3, "Ouyang k=2 " + to_string(ouyang_bound(8, 3, 3, 2)));
  o.require(ouyang_bound_raw(10, 3, 4, 3) == BigRational(33, 7), "Ouyang k=3 " + to_string(ouyang_bound_raw(10, 3, 4, 3)));
  o.require(caro_wei_bound(prism(3)) == BigRational(3, 2), "Caro-Wei " + to_string(caro_wei_bound(prism(3))));
  if (o.passed) o.detail << "10/3, 3, 33/7, 3/2";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  Outcome (*run)(const RunConfig&);
};

constexpr Criterion criteria[] = {
    {1, "K5 count 432 and exhaustive census", 5, result4_census},
    {2, "schedule replay counts K6..K10", 5, schedule_counts},
    {3, "final face counts and genus", 0, final_faces},
    {4, "steps 1-14 build or report failure", 0, algorithm_runs},
    {5, "near-wheel sweep n=3..6", 600, near_wheel_sweep},
    {6, "joint-tree word genus equals face genus", 0, joint_tree_correspondence},
    {7, "word calculus", 0, word_calculus},
    {8, "cubic max genus equals max NSIS", 0, cubic_equality},
    {9, "bound soundness and minor monotonicity", 0, soundness},
    {10, "comparison arithmetic", 0, comparison_arithmetic},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const RunConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result, int only) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    CriterionResult r{c.id, c.title, false, {}, 0, c.limit_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(config);
      r.passed = o.passed;
      r.detail = o.detail.str();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; took " + std::to_string(r.seconds) + " s";
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace genuslab
