#include "genuslab/km.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "genuslab/errors.hpp"
#include "parallel.hpp"

namespace genuslab {

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string out;
  for (int x : t) out += (out.empty() ? "" : " x ") + std::to_string(x);
  return out;
}

void check_corner(const Embedding& e, Vertex v, int corner) {
  const int slots = std::max(1, e.graph.degree(v));
  if (corner < 0 || corner >= slots) {
    throw std::invalid_argument("corner " + std::to_string(corner) + " at vertex " + std::to_string(v) +
                                " is out of range 0.." + std::to_string(slots - 1));
  }
}

void insert_after(std::vector<Dart>& cycle, int corner, std::initializer_list<Dart> darts) {
  const auto at = cycle.empty() ? cycle.begin() : cycle.begin() + corner + 1;
  cycle.insert(at, darts);
}

void require_one_face(const Embedding& e, const char* who) {
  if (trace_faces(e).size() != 1) throw std::invalid_argument(std::string(who) + " needs a one-face embedding");
}

int face_count(const MultiGraph& g, std::vector<std::vector<Dart>> cycles) {
  return static_cast<int>(trace_faces(Embedding(g, RotationSystem(g, std::move(cycles)))).size());
}

MultiGraph with_edges(const MultiGraph& g, std::initializer_list<Edge> extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra);
  return MultiGraph(g.vertex_count(), std::move(edges));
}

std::vector<int> observed_tuple(const Embedding& e, const InsertionStep& st) {
  if (st.kind == InsertionStep::Kind::vtype) {
    const auto t = count_vtype_ways(e, st.vtype);
    return {t[0], t[1], t[2]};
  }
  require_one_face(e, "single-edge insertion");
  return {corner_count(e, st.vtype.center), corner_count(e, st.vtype.first)};
}

Embedding apply_step(const Embedding& e, const InsertionStep& st, const std::vector<int>& corners) {
  if (st.kind == InsertionStep::Kind::vtype) {
    return insert_vtype_one_face(e, st.vtype, {corners[0], corners[1], corners[2]});
  }
  return insert_edge_two_face(e, st.vtype.center, st.vtype.first, {corners[0], corners[1]});
}

bool is_complete(const MultiGraph& g) {
  const int m = g.vertex_count();
  return is_simple(g) && g.edge_count() == static_cast<std::size_t>(m) * (m - 1) / 2;
}

}  // namespace

void VTypeEdge::validate(int n) const {
  for (Vertex v : {center, first, second}) {
    if (v < 1 || v > n) throw std::invalid_argument(text() + ": vertex " + std::to_string(v) + " out of range");
  }
  if (center == first || center == second || first == second) {
    throw std::invalid_argument(text() + ": the three vertices must be distinct");
  }
}

std::string VTypeEdge::text() const {
  return "V_" + std::to_string(center) + "^{" + std::to_string(first) + "," + std::to_string(second) + "}";
}

InsertionStep InsertionStep::v(Vertex j, Vertex i, Vertex k, std::vector<int> mult) {
  return {Kind::vtype, {j, i, k}, std::move(mult)};
}

InsertionStep InsertionStep::e(Vertex j, Vertex k, std::vector<int> mult) {
  return {Kind::single_edge, {j, k, 0}, std::move(mult)};
}

std::string InsertionStep::text() const {
  const std::string head = kind == Kind::vtype
                               ? vtype.text()
                               : "e^{" + std::to_string(vtype.center) + "," + std::to_string(vtype.first) + "}";
  return multiplicities.empty() ? head : head + " : " + tuple_text(multiplicities);
}

FactoredCount FactoredCount::of(std::vector<std::vector<int>> factors) {
  FactoredCount out;
  out.value = 1;
  for (const auto& t : factors) {
    for (int x : t) {
      if (x <= 0) throw std::invalid_argument("multiplicities must be positive");
      out.value *= x;
      for (const auto& [p, k] : factorize(static_cast<std::uint64_t>(x))) out.prime_factorization[p] += k;
    }
  }
  out.step_factors = std::move(factors);
  return out;
}

std::string FactoredCount::factorization_text() const {
  std::string out;
  for (const auto& [p, k] : prime_factorization) {
    out += (out.empty() ? "" : " * ") + std::to_string(p) + (k == 1 ? "" : "^" + std::to_string(k));
  }
  return out.empty() ? "1" : out;
}

Embedding path_tree_embedding(int m) {
  if (m < 2) throw std::invalid_argument("path tree needs m >= 2");
  std::vector<Vertex> order;
  for (Vertex v = 2; v <= m; ++v) order.push_back(v);
  order.push_back(1);
  MultiGraph g = path(order);
  return Embedding(g, RotationSystem::identity(g));
}

int corner_count(const Embedding& e, Vertex v) {
  e.graph.check_vertex(v);
  if (e.graph.degree(v) == 0) return 1;
  int count = 0;
  for (const auto& face : trace_faces(e).faces) {
    for (Dart d : face) count += e.graph.owner(d) == v ? 1 : 0;
  }
  return count;
}

std::array<int, 3> count_vtype_ways(const Embedding& e, const VTypeEdge& vt) {
  vt.validate(e.graph.vertex_count());
  require_one_face(e, "count_vtype_ways");
  return {corner_count(e, vt.center), corner_count(e, vt.first), corner_count(e, vt.second)};
}

Embedding insert_vtype_one_face(const Embedding& e, const VTypeEdge& vt, const CornerChoice& choice) {
  vt.validate(e.graph.vertex_count());
  require_one_face(e, "insert_vtype_one_face");
  check_corner(e, vt.center, choice.center);
  check_corner(e, vt.first, choice.first);
  check_corner(e, vt.second, choice.second);

  const MultiGraph g = with_edges(e.graph, {{vt.center, vt.first}, {vt.center, vt.second}});
  const Dart to_first = dart_of(e.graph.edge_count(), 0);
  const Dart to_second = dart_of(e.graph.edge_count() + 1, 0);
  std::optional<std::vector<std::vector<Dart>>> found;
  for (bool swapped : {false, true}) {
    auto cycles = e.rotation.cycles();
    if (swapped) {
      insert_after(cycles[vt.center - 1], choice.center, {to_second, to_first});
    } else {
      insert_after(cycles[vt.center - 1], choice.center, {to_first, to_second});
    }
    insert_after(cycles[vt.first - 1], choice.first, {twin(to_first)});
    insert_after(cycles[vt.second - 1], choice.second, {twin(to_second)});
    if (face_count(g, cycles) == 1) {
      if (found) throw InternalError(vt.text() + ": both orders leave one face");
      found = std::move(cycles);
    }
  }
  if (!found) throw InternalError(vt.text() + ": neither order leaves one face");
  return Embedding(g, RotationSystem(g, std::move(*found)));
}

Embedding insert_edge_two_face(const Embedding& e, Vertex j, Vertex k, std::array<int, 2> corners) {
  e.graph.check_vertex(j);
  e.graph.check_vertex(k);
  if (j == k) throw std::invalid_argument("insert_edge_two_face: endpoints must differ");
  require_one_face(e, "insert_edge_two_face");
  check_corner(e, j, corners[0]);
  check_corner(e, k, corners[1]);
  const MultiGraph g = with_edges(e.graph, {{j, k}});
  const Dart d = dart_of(e.graph.edge_count(), 0);
  auto cycles = e.rotation.cycles();
  insert_after(cycles[j - 1], corners[0], {d});
  insert_after(cycles[k - 1], corners[1], {twin(d)});
  Embedding out(g, RotationSystem(g, std::move(cycles)));
  if (trace_faces(out).size() != 2) throw InternalError("edge inside one face did not split it");
  return out;
}

Embedding insert_vtype_nonincreasing(const Embedding& e, const VTypeEdge& vt) {
  vt.validate(e.graph.vertex_count());
  const int before = static_cast<int>(trace_faces(e).size());
  const MultiGraph g = with_edges(e.graph, {{vt.center, vt.first}, {vt.center, vt.second}});
  const Dart to_first = dart_of(e.graph.edge_count(), 0);
  const Dart to_second = dart_of(e.graph.edge_count() + 1, 0);
  const int rj = std::max(1, e.graph.degree(vt.center));
  const int ri = std::max(1, e.graph.degree(vt.first));
  const int rk = std::max(1, e.graph.degree(vt.second));
  for (int cj = 0; cj < rj; ++cj) {
    for (int ci = 0; ci < ri; ++ci) {
      for (int ck = 0; ck < rk; ++ck) {
        for (bool swapped : {false, true}) {
          auto cycles = e.rotation.cycles();
          if (swapped) {
            insert_after(cycles[vt.center - 1], cj, {to_second, to_first});
          } else {
            insert_after(cycles[vt.center - 1], cj, {to_first, to_second});
          }
          insert_after(cycles[vt.first - 1], ci, {twin(to_first)});
          insert_after(cycles[vt.second - 1], ck, {twin(to_second)});
          if (face_count(g, cycles) <= before) return Embedding(g, RotationSystem(g, std::move(cycles)));
        }
      }
    }
  }
  throw InternalError(vt.text() + ": every placement adds a face");
}

InsertionSchedule builtin_schedule(int m) {
  using S = InsertionStep;
  switch (m) {
    case 5:
      return {5, {S::v(1, 2, 3, {1, 1, 2}), S::v(4, 1, 2, {2, 3, 2}), S::v(5, 2, 3, {2, 3, 3})}};
    case 6:
      return {6,
              {S::v(1, 2, 3, {1, 1, 2}), S::v(1, 4, 5, {3, 2, 2}), S::v(2, 4, 5, {2, 3, 3}),
               S::v(6, 2, 4, {2, 4, 4}), S::v(3, 5, 6, {3, 4, 4})}};
    case 7:
      return {7,
              {S::v(1, 2, 3, {1, 1, 2}), S::v(1, 4, 5, {3, 2, 2}), S::v(6, 1, 2, {2, 5, 2}),
               S::v(6, 3, 4, {4, 3, 3}), S::v(2, 4, 5, {3, 4, 3}), S::v(7, 2, 3, {2, 5, 4}),
               S::v(7, 4, 5, {4, 5, 4}), S::e(3, 5, {5, 5})}};
    case 8:
      return {8,
              {S::v(1, 2, 3, {1, 1, 2}), S::v(1, 4, 5, {3, 2, 2}), S::v(1, 6, 7, {5, 2, 2}),
               S::v(2, 4, 5, {2, 3, 3}), S::v(2, 6, 7, {4, 3, 3}), S::v(8, 2, 3, {2, 6, 3}),
               S::v(8, 4, 5, {4, 4, 4}), S::v(6, 8, 3, {4, 6, 4}), S::v(4, 6, 7, {5, 6, 4}),
               S::v(3, 5, 7, {5, 5, 5}), S::e(5, 7, {6, 6})}};
    case 9:
      return {9,
              {S::v(1, 2, 3, {1, 1, 2}), S::v(1, 4, 5, {3, 2, 2}), S::v(1, 6, 7, {5, 2, 2}),
               S::v(8, 1, 2, {2, 7, 2}), S::v(8, 3, 4, {4, 3, 3}), S::v(8, 5, 6, {6, 3, 3}),
               S::v(2, 4, 5, {3, 4, 4}), S::v(2, 6, 7, {5, 4, 3}), S::v(9, 2, 3, {2, 7, 4}),
               S::v(9, 4, 5, {4, 5, 5}), S::v(9, 6, 7, {6, 5, 4}), S::v(3, 5, 6, {5, 6, 6}),
               S::v(7, 3, 5, {5, 7, 7}), S::v(4, 6, 7, {6, 7, 7})}};
    case 10:
      return {10,
              {S::v(1, 2, 3, {1, 1, 2}),  S::v(1, 4, 5, {3, 2, 2}),  S::v(1, 6, 7, {5, 2, 2}),
               S::v(1, 8, 9, {7, 2, 2}),  S::v(2, 4, 5, {2, 3, 3}),  S::v(2, 6, 7, {4, 3, 3}),
               S::v(2, 8, 9, {6, 3, 3}),  S::v(10, 2, 3, {2, 8, 3}), S::v(10, 4, 5, {4, 4, 4}),
               S::v(10, 6, 7, {6, 4, 4}), S::v(8, 10, 3, {4, 8, 4}), S::v(8, 4, 5, {6, 5, 5}),
               S::v(6, 8, 9, {5, 8, 4}),  S::v(6, 3, 4, {7, 5, 6}),  S::v(3, 5, 7, {6, 6, 5}),
               S::v(9, 3, 4, {5, 8, 7}),  S::v(9, 5, 7, {7, 7, 6}),  S::v(7, 4, 5, {7, 8, 8})}};
    default:
      throw std::invalid_argument("no built-in schedule for m = " + std::to_string(m) + " (have 5..10)");
  }
}

ReplayResult replay_schedule(const InsertionSchedule& s) {
  Embedding e = path_tree_embedding(s.m);
  std::vector<std::vector<int>> factors;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    const std::vector<int> seen = observed_tuple(e, st);
    if (!st.multiplicities.empty() && st.multiplicities != seen) {
      throw ScheduleMismatch(i + 1, st.text() + " but corners give " + tuple_text(seen));
    }
    e = apply_step(e, st, std::vector<int>(seen.size(), 0));
    factors.push_back(seen);
  }
  if (!is_complete(e.graph)) {
    throw std::invalid_argument("schedule for m = " + std::to_string(s.m) + " does not end at K_m");
  }
  return {std::move(e), FactoredCount::of(std::move(factors))};
}

AlgorithmRun run_paper_algorithm(int m) {
  if (m < 3) throw std::invalid_argument("run_paper_algorithm needs m >= 3");
  const auto md = [m](int i) {
    i %= m;
    if (i <= 0) i += m;
    return i;
  };
  const std::size_t total = static_cast<std::size_t>(m) * (m - 1) / 2;
  Embedding e = path_tree_embedding(m);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m) + 1, std::vector<bool>(m + 1, false));
  for (const auto& [u, v] : e.graph.edges()) adj[u][v] = adj[v][u] = true;
  InsertionSchedule schedule{m, {}};

  int k = 1, a = 2, b = 3, step = 3;
  std::set<std::tuple<int, int, int, int, std::size_t>> seen;
  std::string failure;
  bool two_face_finish = false;
  while (true) {
    if (!seen.emplace(step, k, a, b, e.graph.edge_count()).second) {
      std::string missing;
      for (int u = 1; u <= m; ++u) {
        for (int v = u + 1; v <= m; ++v) {
          if (!adj[u][v]) missing += (missing.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
        }
      }
      failure = "stuck at step " + std::to_string(step) + " with k=" + std::to_string(k) + " a=" +
                std::to_string(a) + " b=" + std::to_string(b) + "; " + std::to_string(e.graph.edge_count()) +
                " of " + std::to_string(total) + " edges placed, missing " + missing;
      break;
    }
    if (step == 3) {
      if (e.graph.edge_count() == total) break;
      step = 4;
    } else if (step == 4) {
      step = 5;
      if (e.graph.edge_count() + 1 == total && !adj[k][a]) {
        const InsertionStep st = InsertionStep::e(k, a);
        schedule.steps.push_back(InsertionStep::e(k, a, observed_tuple(e, st)));
        e = insert_edge_two_face(e, k, a);
        adj[k][a] = adj[a][k] = true;
        two_face_finish = true;
        break;
      }
    } else if (step == 5) {
      step = adj[k][a] ? 10 : 6;
    } else if (step == 6) {
      if (k != a && k != b && a != b && !adj[k][b]) {
        const InsertionStep st = InsertionStep::v(k, a, b);
        schedule.steps.push_back(InsertionStep::v(k, a, b, observed_tuple(e, st)));
        e = insert_vtype_one_face(e, st.vtype);
        adj[k][a] = adj[a][k] = adj[k][b] = adj[b][k] = true;
        step = 9;
      } else {
        b = md(b + 1);
        step = 7;
      }
    } else if (step == 7) {
      step = b == md(k - 1) ? 8 : 6;
    } else if (step == 8) {
      std::swap(k, a);
      step = 3;
    } else if (step == 9) {
      b = md(a + 3);
      a = md(a + 2);
      step = 11;
    } else if (step == 10) {
      a = md(a + 1);
      step = 11;
    } else if (step == 11) {
      step = a == md(k - 1) ? 12 : 3;
    } else if (step == 12) {
      k = 1;
      step = 13;
    } else if (step == 13) {
      // k past m: every vertex is saturated, so step 3 stops.
      if (k > m) {
        step = 3;
      } else if (e.graph.degree(k) < m - 1) {
        a = md(k + 2);
        b = md(k + 3);
        step = 3;
      } else {
        step = 14;
      }
    } else {
      ++k;
      step = 13;
    }
  }
  const int faces = static_cast<int>(trace_faces(e).size());
  const int genus = genus_of(e);
  if (failure.empty()) {
    const int beta = static_cast<int>(total) - m + 1;
    if (!is_complete(e.graph) || faces != (two_face_finish ? 2 : 1) || genus != beta / 2) {
      throw InternalError("steps finished without a maximum genus embedding of K_" + std::to_string(m));
    }
  }
  return AlgorithmRun{m, failure.empty(), std::move(failure), std::move(schedule), std::move(e), faces, genus};
}

PlacementCensus enumerate_placements(const InsertionSchedule& s, const RunConfig& config) {
  const ReplayResult canonical = replay_schedule(s);
  std::vector<int> radix;
  BigInt total = 1;
  for (const auto& t : canonical.count.step_factors) {
    for (int x : t) radix.push_back(x);
  }
  total = canonical.count.value;
  if (total > config.enumeration_budget) {
    throw BudgetExceeded("placement census", total, config.enumeration_budget);
  }
  const std::uint64_t n = static_cast<std::uint64_t>(total);

  std::mutex lock;
  std::set<std::vector<std::vector<Dart>>> distinct;
  PlacementCensus out;
  out.replays = n;
  detail::parallel_chunks(
      n, config.resolved_threads(),
      [&](std::uint64_t begin, std::uint64_t end) {
        std::set<std::vector<std::vector<Dart>>> local;
        std::vector<int> digits(radix.size());
        for (std::uint64_t ord = begin; ord < end; ++ord) {
          std::uint64_t rest = ord;
          for (std::size_t d = 0; d < radix.size(); ++d) {
            digits[d] = static_cast<int>(rest % static_cast<std::uint64_t>(radix[d]));
            rest /= static_cast<std::uint64_t>(radix[d]);
          }
          Embedding e = path_tree_embedding(s.m);
          std::size_t pos = 0;
          for (std::size_t i = 0; i < s.steps.size(); ++i) {
            const auto& st = s.steps[i];
            const std::vector<int> seen = observed_tuple(e, st);
            if (!std::equal(seen.begin(), seen.end(), radix.begin() + static_cast<std::ptrdiff_t>(pos))) {
              throw ScheduleMismatch(i + 1, "corner counts depend on earlier placements");
            }
            e = apply_step(e, st, std::vector<int>(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   digits.begin() + static_cast<std::ptrdiff_t>(pos + seen.size())));
            pos += seen.size();
          }
          local.insert(e.rotation.canonical().cycles());
        }
        std::lock_guard guard(lock);
        distinct.merge(local);
      },
      64);

  out.distinct_rotations = distinct.size();
  const MultiGraph& g = canonical.embedding.graph;
  for (const auto& cycles : distinct) {
    ++out.genus_counts[genus_of(Embedding(g, RotationSystem(g, cycles)))];
  }
  return out;
}

StahlBound stahl_bound(int m) {
  if (m < 6) throw std::invalid_argument("stahl_bound needs m >= 6");
  StahlBound out;
  out.first = pow(factorial(static_cast<unsigned>(m - 6)), 4) * pow(factorial(static_cast<unsigned>(m - 3)), m - 4);
  if (m % 4 == 0 || m % 4 == 3) {
    const BigRational ratio(m - 2, m - 1);
    out.second = ratio * ratio * BigRational(pow(factorial(static_cast<unsigned>(m - 3)), m));
  }
  return out;
}

}  // namespace genuslab
