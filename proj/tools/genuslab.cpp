// genuslab command line.

#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genuslab/acceptance.hpp"
#include "genuslab/bounds.hpp"
#include "genuslab/catalog.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/errors.hpp"
#include "genuslab/io.hpp"
#include "genuslab/joint_tree.hpp"
#include "genuslab/km.hpp"
#include "genuslab/near_wheel.hpp"
#include "genuslab/surface_word.hpp"

#ifndef GENUSLAB_VERSION
#define GENUSLAB_VERSION "0.0.0"
#endif

using nlohmann::json;
using namespace genuslab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

json config_json(const RunConfig& c) {
  return {{"enumeration_budget", c.enumeration_budget},
          {"thread_count", c.thread_count == 0 ? json("auto") : json(c.thread_count)},
          {"output_format", c.output_format == OutputFormat::json ? "json" : "text"},
          {"seed", c.seed}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& c, const std::string& command, json result) {
  json doc{{"tool", "genuslab"}, {"version", GENUSLAB_VERSION}, {"command", command},
           {"config", config_json(c)}, {"result", std::move(result)}};
  if (c.output_format == OutputFormat::json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    flatten(doc["result"], "", std::cout);
  }
}

MultiGraph load_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return graph_from_json(read_json_file(spec));
  try {
    return catalog_graph(spec);
  } catch (const std::invalid_argument&) {
    throw UsageError("--graph: '" + spec + "' is neither a file nor a catalog name");
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("expected a comma separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, sep)) out.push_back(tok);
  return out;
}

json faces_json(const Embedding& e) {
  return {{"faces", trace_faces(e).size()}, {"genus", genus_of(e)}};
}

json distribution_json(const GenusDistribution& d) {
  json out = json::object();
  for (const auto& [g, n] : d.counts) out[std::to_string(g)] = big(n);
  return out;
}

json step_json(const InsertionStep& s) {
  return {{"kind", s.kind == InsertionStep::Kind::vtype ? "vtype" : "edge"},
          {"step", s.text()},
          {"multiplicities", s.multiplicities}};
}

json factored_json(const FactoredCount& c) {
  json primes = json::object();
  for (const auto& [p, k] : c.prime_factorization) primes[std::to_string(p)] = k;
  return {{"value", big(c.value)}, {"decimal", c.value.str()}, {"factorization", c.factorization_text()},
          {"prime_exponents", primes}};
}

json report_json(const BoundReport& r) {
  json out{{"bound", to_string(r.bound_value)}, {"witness", r.witness}, {"epsilon", r.epsilon},
           {"residual_max_genus", r.residual_max_genus}};
  out["oracle_max_genus"] = r.oracle_value ? json(*r.oracle_value) : json(nullptr);
  return out;
}

json chain_json(const ChainReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"set", s.set}, {"half_sum", to_string(s.half_sum)}, {"betti", s.betti},
                      {"upper_embeddable", s.upper_embeddable ? json(*s.upper_embeddable) : json(nullptr)}});
  }
  return {{"bound", to_string(r.bound_value)},
          {"stages", stages},
          {"residual_max_genus", r.residual_max_genus},
          {"propagated_upper_embeddable", r.propagated_upper_embeddable},
          {"oracle_max_genus", r.oracle_value ? json(*r.oracle_value) : json(nullptr)},
          {"oracle_upper_embeddable", r.oracle_upper_embeddable ? json(*r.oracle_upper_embeddable) : json(nullptr)}};
}

json compare_json(const MultiGraph& g, const RunConfig& config) {
  json out;
  const int beta = betti(g);
  const auto gir = girth(g);
  const int delta = min_degree(g);
  out["betti"] = beta;
  out["girth"] = gir ? json(*gir) : json(nullptr);
  out["min_degree"] = delta;
  out["caro_wei"] = to_string(caro_wei_bound(g));
  try {
    out["theorem_b"] = report_json(best_theorem_b(g, 3, config));
  } catch (const std::invalid_argument& e) {
    out["theorem_b"] = {{"unavailable", e.what()}};
  }
  const int kappa = vertex_connectivity(g, 3);
  try {
    if (!gir) throw std::invalid_argument("forest has no girth");
    out["li_liu"] = {{"connectivity", kappa}, {"bound", to_string(li_liu_bound(beta, *gir, kappa))}};
  } catch (const std::invalid_argument& e) {
    out["li_liu"] = {{"unavailable", e.what()}};
  }
  json ouyang = json::object();
  for (int k = 1; k <= 3; ++k) {
    try {
      if (!gir || !is_simple(g)) throw std::invalid_argument("needs a simple graph with a cycle");
      if (kappa < k) throw std::invalid_argument("graph is not " + std::to_string(k) + "-connected");
      ouyang[std::to_string(k)] = {{"raw", to_string(ouyang_bound_raw(beta, delta, *gir, k))},
                                   {"bound", to_string(ouyang_bound(beta, delta, *gir, k))}};
    } catch (const std::invalid_argument& e) {
      ouyang[std::to_string(k)] = {{"unavailable", e.what()}};
    }
  }
  out["ouyang"] = ouyang;
  try {
    out["oracle_max_genus"] = max_genus_bruteforce(g, config);
  } catch (const BudgetExceeded& e) {
    out["oracle_max_genus"] = nullptr;
    out["oracle_note"] = e.what();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph embedding, surface word and maximum genus toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", GENUSLAB_VERSION);

  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  std::uint64_t seed = RunConfig{}.seed;
  std::string format = "json";
  app.add_option("--budget", budget, "Rotation systems an exhaustive search may visit")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", seed, "Seed for randomized work");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string graph_arg, rotation_arg, word_arg, attach_arg, set_arg, theorem_arg, tree_arg;
  int n = 0, m = 0, n_min = 3, n_max = 6, only = 0;
  bool want_min = false, want_max = false, want_dist = false, word_out = false, compare = false, census = false;
  std::string schedule_name = "paper";

  auto* genus = app.add_subcommand("genus", "Genus of an embedding, or min/max genus by enumeration");
  genus->add_option("--graph", graph_arg, "Graph JSON file or catalog name")->required();
  genus->add_option("--rotation", rotation_arg, "Rotation JSON file");
  genus->add_flag("--min", want_min, "Minimum genus");
  genus->add_flag("--max", want_max, "Maximum genus");
  genus->add_flag("--distribution", want_dist, "Genus distribution over all rotation systems");

  auto* word = app.add_subcommand("word", "Polygon word calculus");
  word->require_subcommand(1);
  auto* reduce = word->add_subcommand("reduce", "Reduce a word to standard form");
  reduce->add_option("--word", word_arg, "Word, e.g. \"a b a- b-\"")->required();

  auto* jt = app.add_subcommand("joint-tree", "Boundary word of a joint tree");
  jt->add_option("--graph", graph_arg, "Graph JSON file or catalog name")->required();
  jt->add_option("--rotation", rotation_arg, "Rotation JSON file (default: identity rotation)");
  jt->add_option("--tree", tree_arg, "Comma separated tree edge indices (default: BFS tree)");
  jt->add_flag("--word-out", word_out, "Print only the word, for piping into `word reduce`");

  auto* nw = app.add_subcommand("near-wheel", "Genus of a wheel plus a degree-3 apex");
  nw->add_option("--n", n, "Spokes")->check(CLI::Range(3, 1000));
  nw->add_option("--attach", attach_arg, "Three points among V<i>, C, S<i>, R<i>");
  auto* sweep = nw->add_subcommand("sweep", "Check every attachment for a range of n");
  sweep->add_option("--n-min", n_min)->check(CLI::Range(3, 1000));
  sweep->add_option("--n-max", n_max)->check(CLI::Range(3, 1000));

  auto* nsis = app.add_subcommand("nsis", "Maximum non-separating independent set");
  nsis->add_option("--graph", graph_arg, "Graph JSON file or catalog name")->required();

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on maximum genus");
  bounds->add_option("--graph", graph_arg, "Graph JSON file or catalog name")->required();
  bounds->add_option("--theorem", theorem_arg, "b, c or d")->check(CLI::IsMember({"b", "c", "d"}));
  bounds->add_option("--set", set_arg, "Vertices, e.g. 1,5,9; stages for c separated by ';'");
  bounds->add_flag("--compare", compare, "Best bounds found next to the girth formulas");

  auto* km = app.add_subcommand("km", "Maximum genus embeddings of complete graphs");
  km->require_subcommand(1);
  auto* build = km->add_subcommand("build", "Run steps 1-14");
  build->add_option("--m", m, "Order")->required()->check(CLI::Range(3, 200));
  auto* count = km->add_subcommand("count", "Replay a built-in schedule and count");
  count->add_option("--m", m, "Order")->required()->check(CLI::Range(5, 10));
  count->add_option("--schedule", schedule_name)->check(CLI::IsMember({"paper"}));
  count->add_flag("--census", census, "Also replay every placement and count distinct rotation systems");
  auto* cmp = km->add_subcommand("compare", "Schedule count against Stahl's bounds");
  cmp->add_option("--m", m, "Order")->required()->check(CLI::Range(6, 10));

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config = RunConfig::from_environment();
    if (budget) config.enumeration_budget = *budget;
    config.thread_count = threads;
    config.seed = seed;
    config.output_format = format == "text" ? OutputFormat::text : OutputFormat::json;

    if (*genus) {
      const MultiGraph g = load_graph(graph_arg);
      json out{{"graph", graph_to_json(g)}};
      if (!rotation_arg.empty()) {
        out["embedding"] = faces_json(Embedding(g, rotation_from_json(g, read_json_file(rotation_arg))));
      }
      if (want_min) {
        const RotationSystem r = min_genus_rotation(g, config);
        out["min_genus"] = genus_of(Embedding(g, r));
        out["min_rotation"] = rotation_to_json(r)["rotation"];
      }
      if (want_max) {
        const RotationSystem r = max_genus_rotation(g, config);
        out["max_genus"] = genus_of(Embedding(g, r));
        out["max_rotation"] = rotation_to_json(r)["rotation"];
      }
      if (want_dist) out["distribution"] = distribution_json(genus_distribution(g, config));
      if (rotation_arg.empty() && !want_min && !want_max && !want_dist) {
        throw UsageError("genus: give --rotation, --min, --max or --distribution");
      }
      emit(config, "genus", out);
    } else if (*reduce) {
      const auto w = parse_word(word_arg);
      const auto r = reduce_to_standard(w);
      json trace = json::array();
      for (const auto& s : r.trace) trace.push_back({{"transform", s.transform}, {"detail", s.detail}, {"word", s.word_after}});
      json handles = json::array();
      for (const auto& h : r.handles) handles.push_back(render_letters({h.begin(), h.end()}));
      json out{{"word", render_word(w)}, {"genus", r.genus}, {"standard_form", r.standard_form()},
               {"handles", handles}, {"trace", trace}};
      if (w.polygons().size() == 1) out["oracle_genus"] = genus_oracle(w);
      emit(config, "word reduce", out);
    } else if (*jt) {
      const MultiGraph g = load_graph(graph_arg);
      const RotationSystem r =
          rotation_arg.empty() ? RotationSystem::identity(g) : rotation_from_json(g, read_json_file(rotation_arg));
      SpanningTree t = spanning_tree(g);
      if (!tree_arg.empty()) {
        std::vector<EdgeRef> edges;
        for (int e : parse_ints(tree_arg)) {
          if (e < 0) throw UsageError("--tree: edge indices are nonnegative");
          edges.push_back(EdgeRef{static_cast<std::size_t>(e)});
        }
        t = make_spanning_tree(g, std::move(edges));
      }
      const JointTree joint = build_joint_tree(g, t, r);
      const auto w = associated_surface(joint);
      if (word_out) {
        std::cout << render_word(w) << "\n";
      } else {
        std::vector<std::size_t> tree_idx, co_idx;
        for (EdgeRef e : t.tree_edges) tree_idx.push_back(e.index);
        for (EdgeRef e : t.co_tree_edges) co_idx.push_back(e.index);
        emit(config, "joint-tree",
             {{"word", render_word(w)}, {"genus", reduce_to_standard(w).genus},
              {"face_genus", genus_of(Embedding(g, r))}, {"tree_edges", tree_idx}, {"co_tree_edges", co_idx}});
      }
    } else if (*sweep) {
      if (n_min > n_max) throw UsageError("sweep: --n-min exceeds --n-max");
      const auto rep = verify_theorem_a(n_min, n_max, config);
      json mism = json::array();
      for (const auto& e : rep.mismatches) {
        mism.push_back({{"n", e.n},
                        {"attach", {e.attach[0].label(e.n), e.attach[1].label(e.n), e.attach[2].label(e.n)}},
                        {"predicted", e.predicted.genus},
                        {"bruteforce", e.bruteforce}});
      }
      emit(config, "near-wheel sweep", {{"checked", rep.checked.size()}, {"mismatches", mism}, {"ok", rep.ok()}});
      return rep.ok() ? 0 : 1;
    } else if (*nw) {
      if (n == 0 || attach_arg.empty()) throw UsageError("near-wheel: --n and --attach are required");
      const auto tokens = split(attach_arg, ',');
      if (tokens.size() != 3) throw UsageError("--attach needs exactly three points");
      const std::array<AttachPoint, 3> attach{parse_attach_point(tokens[0], n), parse_attach_point(tokens[1], n),
                                              parse_attach_point(tokens[2], n)};
      const auto pred = predict_genus(n, attach);
      const auto nwg = build_near_wheel(n, attach);
      emit(config, "near-wheel",
           {{"n", n},
            {"attach", tokens},
            {"case", to_string(pred.label)},
            {"predicted", pred.genus},
            {"bruteforce", min_genus_bruteforce(nwg.graph, config)},
            {"graph", graph_to_json(nwg.graph)}});
    } else if (*nsis) {
      const MultiGraph g = load_graph(graph_arg);
      const auto r = max_nsis(g);
      json out{{"set", r.set}, {"size", r.size()}};
      if (is_regular(g, 3) && is_connected(g)) {
        const auto rep = lemma31_check(g, config);
        out["max_genus"] = rep.max_genus;
        out["equal"] = rep.holds();
      }
      emit(config, "nsis", out);
    } else if (*bounds) {
      const MultiGraph g = load_graph(graph_arg);
      if (compare) {
        emit(config, "bounds compare", compare_json(g, config));
      } else if (theorem_arg == "b") {
        emit(config, "bounds b", report_json(theorem_b_bound(g, parse_ints(set_arg), config)));
      } else if (theorem_arg == "c") {
        std::vector<std::vector<Vertex>> sets;
        for (const auto& stage : split(set_arg, ';')) sets.push_back(parse_ints(stage));
        if (sets.empty()) throw UsageError("--theorem c needs --set with at least one stage");
        emit(config, "bounds c", chain_json(theorem_c_bound(g, sets, config)));
      } else if (theorem_arg == "d") {
        NsisResult a = set_arg.empty() ? max_nsis(g) : NsisResult{parse_ints(set_arg)};
        const auto r = theorem_d_bound(g, a, config);
        emit(config, "bounds d",
             {{"witness", r.witness.set}, {"closed_neighborhood", r.closed_neighborhood},
              {"max_genus", r.max_genus}, {"alpha_rest", r.alpha_rest}, {"bound", r.bound_value},
              {"alpha", r.alpha}, {"holds", r.holds()}, {"caro_wei", to_string(caro_wei_bound(g))}});
      } else {
        throw UsageError("bounds: give --theorem b|c|d or --compare");
      }
    } else if (*build) {
      const auto run = run_paper_algorithm(m);
      json steps = json::array();
      for (const auto& s : run.schedule.steps) steps.push_back(step_json(s));
      emit(config, "km build",
           {{"m", m}, {"succeeded", run.succeeded}, {"failure", run.failure}, {"faces", run.faces},
            {"genus", run.genus}, {"steps", steps}, {"graph", graph_to_json(run.embedding.graph)},
            {"rotation", rotation_to_json(run.embedding.rotation)["rotation"]}});
    } else if (*count) {
      const auto schedule = builtin_schedule(m);
      const auto r = replay_schedule(schedule);
      json steps = json::array();
      for (const auto& s : schedule.steps) steps.push_back(step_json(s));
      json out = factored_json(r.count);
      out["m"] = m;
      out["schedule"] = schedule_name;
      out["steps"] = steps;
      out["final"] = faces_json(r.embedding);
      if (census) {
        const auto c = enumerate_placements(schedule, config);
        json genera = json::object();
        for (const auto& [g, k] : c.genus_counts) genera[std::to_string(g)] = k;
        out["census"] = {{"replays", c.replays}, {"distinct_rotations", c.distinct_rotations}, {"genus", genera}};
      }
      emit(config, "km count", out);
    } else if (*cmp) {
      const auto r = replay_schedule(builtin_schedule(m));
      const auto s = stahl_bound(m);
      json out{{"m", m}, {"ours", factored_json(r.count)}, {"stahl_first", big(s.first)},
               {"ours_exceeds_first", r.count.value > s.first}};
      if (s.second) {
        out["stahl_second"] = to_string(*s.second);
        out["ours_exceeds_second"] = BigRational(r.count.value) > *s.second;
      } else {
        out["stahl_second"] = nullptr;
      }
      emit(config, "km compare", out);
    } else if (*verify) {
      bool all = true;
      json rows = json::array();
      const bool text = config.output_format == OutputFormat::text;
      run_acceptance(
          config,
          [&](const CriterionResult& r) {
            all = all && r.passed;
            if (text) {
              std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.seconds
                        << " s)  " << r.detail << std::endl;
            }
            rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                            {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
          },
          only);
      if (!text) emit(config, "verify", {{"criteria", rows}, {"all_passed", all}});
      return all ? 0 : 1;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
