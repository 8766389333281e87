#include "genuslab/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "genuslab/errors.hpp"
#include "parallel.hpp"

namespace genuslab {

RotationSystem::RotationSystem(const MultiGraph& g, std::vector<std::vector<Dart>> cycles)
    : cycles_(std::move(cycles)) {
  if (static_cast<int>(cycles_.size()) != g.vertex_count()) {
    throw std::invalid_argument("rotation system needs one cycle per vertex");
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto got = cycles_[v - 1];
    std::sort(got.begin(), got.end());
    const auto want = g.darts_at(v);
    if (!std::equal(got.begin(), got.end(), want.begin(), want.end())) {
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its darts");
    }
  }
}

RotationSystem RotationSystem::identity(const MultiGraph& g) {
  std::vector<std::vector<Dart>> cycles;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto ds = g.darts_at(v);
    cycles.emplace_back(ds.begin(), ds.end());
  }
  return RotationSystem(g, std::move(cycles));
}

RotationSystem RotationSystem::random(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<std::vector<Dart>> cycles;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto ds = g.darts_at(v);
    std::vector<Dart> c(ds.begin(), ds.end());
    std::shuffle(c.begin(), c.end(), rng);
    cycles.push_back(std::move(c));
  }
  return RotationSystem(g, std::move(cycles));
}

std::vector<Dart> RotationSystem::successor_table() const {
  std::size_t darts = 0;
  for (const auto& c : cycles_) darts += c.size();
  std::vector<Dart> succ(darts);
  for (const auto& c : cycles_) {
    for (std::size_t i = 0; i < c.size(); ++i) succ[c[i]] = c[(i + 1) % c.size()];
  }
  return succ;
}

RotationSystem RotationSystem::canonical() const {
  RotationSystem out = *this;
  for (auto& c : out.cycles_) {
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  }
  return out;
}

Embedding::Embedding(MultiGraph g, RotationSystem r) : graph(std::move(g)), rotation(std::move(r)) {
  // Re-validate: the rotation may have been built for a different graph.
  rotation = RotationSystem(graph, rotation.cycles());
}

int count_faces(std::span<const Dart> succ, std::vector<std::uint32_t>& mark, std::uint32_t& stamp) {
  if (succ.empty()) return 1;
  if (++stamp == 0) {
    std::fill(mark.begin(), mark.end(), 0);
    stamp = 1;
  }
  const Dart n = static_cast<Dart>(succ.size());
  int faces = 0;
  for (Dart start = 0; start < n; ++start) {
    if (mark[start] == stamp) continue;
    ++faces;
    Dart d = start;
    do {
      mark[d] = stamp;
      d = succ[twin(d)];
    } while (d != start);
  }
  return faces;
}

FaceSet trace_faces(const Embedding& e) {
  FaceSet out;
  const auto succ = e.rotation.successor_table();
  if (succ.empty()) {
    out.faces.emplace_back();
    return out;
  }
  std::vector<bool> seen(succ.size(), false);
  for (Dart start = 0; start < static_cast<Dart>(succ.size()); ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    Dart d = start;
    do {
      seen[d] = true;
      face.push_back(d);
      d = succ[twin(d)];
    } while (d != start);
    out.faces.push_back(std::move(face));
  }
  return out;
}

int euler_genus(int vertices, std::size_t edges, std::size_t faces) {
  const long twice = 2 - static_cast<long>(vertices) + static_cast<long>(edges) - static_cast<long>(faces);
  if (twice < 0 || twice % 2 != 0) {
    throw InternalError("Euler characteristic parity violated: V=" + std::to_string(vertices) +
                        " E=" + std::to_string(edges) + " F=" + std::to_string(faces));
  }
  return static_cast<int>(twice / 2);
}

int genus_of(const Embedding& e) {
  if (!is_connected(e.graph)) throw std::invalid_argument("genus_of requires a connected graph");
  return euler_genus(e.graph.vertex_count(), e.graph.edge_count(), trace_faces(e).size());
}

// --- enumeration -------------------------------------------------------------

BigInt RotationEnumerator::count_for(const MultiGraph& g) {
  BigInt total = 1;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d > 1) total *= factorial(static_cast<unsigned>(d - 1));
  }
  return total;
}

RotationEnumerator::RotationEnumerator(const MultiGraph& g, std::uint64_t budget) : graph_(g) {
  const BigInt required = count_for(g);
  if (required > budget) throw BudgetExceeded("rotation enumeration", required, budget);
  total_ = static_cast<std::uint64_t>(required);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto ds = g.darts_at(v);
    std::vector<std::vector<Dart>> orders;
    if (ds.empty()) {
      orders.emplace_back();
    } else {
      std::vector<Dart> rest(ds.begin() + 1, ds.end());
      do {
        std::vector<Dart> c{ds.front()};
        c.insert(c.end(), rest.begin(), rest.end());
        orders.push_back(std::move(c));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    orders_.push_back(std::move(orders));
  }
}

void RotationEnumerator::for_range(std::uint64_t begin, std::uint64_t end,
                                   const std::function<bool(std::span<const Dart>)>& visit) const {
  end = std::min(end, total_);
  if (begin >= end) return;
  const std::size_t nv = orders_.size();
  // Vertex 1 is the least significant digit.
  std::vector<std::size_t> digit(nv, 0);
  std::uint64_t rest = begin;
  for (std::size_t v = 0; v < nv; ++v) {
    digit[v] = static_cast<std::size_t>(rest % orders_[v].size());
    rest /= orders_[v].size();
  }
  std::vector<Dart> succ(graph_.dart_count());
  auto apply = [&](std::size_t v) {
    const auto& c = orders_[v][digit[v]];
    for (std::size_t i = 0; i < c.size(); ++i) succ[c[i]] = c[(i + 1) % c.size()];
  };
  for (std::size_t v = 0; v < nv; ++v) apply(v);
  for (std::uint64_t ordinal = begin; ordinal < end; ++ordinal) {
    if (!visit(succ)) return;
    for (std::size_t v = 0; v < nv; ++v) {
      if (++digit[v] < orders_[v].size()) {
        apply(v);
        break;
      }
      digit[v] = 0;
      apply(v);
    }
  }
}

RotationSystem RotationEnumerator::at(std::uint64_t ordinal) const {
  if (ordinal >= total_) throw std::out_of_range("rotation ordinal out of range");
  std::vector<std::vector<Dart>> cycles;
  for (const auto& orders : orders_) {
    cycles.push_back(orders[static_cast<std::size_t>(ordinal % orders.size())]);
    ordinal /= orders.size();
  }
  return RotationSystem(graph_, std::move(cycles));
}

std::vector<RotationSystem> enumerate_rotations(const MultiGraph& g, std::uint64_t budget) {
  const RotationEnumerator en(g, budget);
  std::vector<RotationSystem> out;
  out.reserve(static_cast<std::size_t>(en.count()));
  for (std::uint64_t i = 0; i < en.count(); ++i) out.push_back(en.at(i));
  return out;
}

BigInt GenusDistribution::total() const {
  BigInt t = 0;
  for (const auto& [genus, c] : counts) t += c;
  return t;
}

void GenusDistribution::merge(const GenusDistribution& other) {
  for (const auto& [genus, c] : other.counts) counts[genus] += c;
}

namespace {

using detail::parallel_chunks;

struct Extreme {
  int faces;
  std::uint64_t ordinal;
};

// Finds the rotation with the most (want_max_faces) or fewest faces, stopping
// once `target` faces are reached. Ties resolve to the least ordinal, so the
// result does not depend on the thread count.
Extreme extreme_faces(const RotationEnumerator& en, std::size_t darts, bool want_max_faces, int target,
                      unsigned threads) {
  std::mutex lock;
  Extreme best{want_max_faces ? -1 : std::numeric_limits<int>::max(), 0};
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
  parallel_chunks(en.count(), threads, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<std::uint32_t> mark(darts, 0);
    std::uint32_t stamp = 0;
    Extreme local{want_max_faces ? -1 : std::numeric_limits<int>::max(), 0};
    std::uint64_t ordinal = b;
    en.for_range(b, e, [&](std::span<const Dart> succ) {
      if (ordinal > first_hit.load(std::memory_order_relaxed)) return false;
      const int f = count_faces(succ, mark, stamp);
      if (want_max_faces ? f > local.faces : f < local.faces) local = {f, ordinal};
      if (f == target) {
        std::uint64_t seen = first_hit.load();
        while (ordinal < seen && !first_hit.compare_exchange_weak(seen, ordinal)) {
        }
        return false;
      }
      ++ordinal;
      return true;
    });
    std::lock_guard guard(lock);
    const bool better = want_max_faces ? local.faces > best.faces : local.faces < best.faces;
    if (better || (local.faces == best.faces && local.ordinal < best.ordinal)) best = local;
  });
  return best;
}

void require_connected(const MultiGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("genus search requires a connected graph");
}

}  // namespace

GenusDistribution genus_distribution(const MultiGraph& g, const RunConfig& config) {
  require_connected(g);
  const RotationEnumerator en(g, config.enumeration_budget);
  std::mutex lock;
  GenusDistribution total;
  const int V = g.vertex_count();
  const std::size_t E = g.edge_count();
  parallel_chunks(en.count(), config.resolved_threads(),
                  [&](std::uint64_t b, std::uint64_t e) {
                    std::vector<std::uint64_t> by_faces(g.dart_count() + 2, 0);
                    std::vector<std::uint32_t> mark(g.dart_count(), 0);
                    std::uint32_t stamp = 0;
                    en.for_range(b, e, [&](std::span<const Dart> succ) {
                      ++by_faces[static_cast<std::size_t>(count_faces(succ, mark, stamp))];
                      return true;
                    });
                    GenusDistribution local;
                    for (std::size_t f = 0; f < by_faces.size(); ++f) {
                      if (by_faces[f] != 0) local.counts[euler_genus(V, E, f)] += by_faces[f];
                    }
                    std::lock_guard guard(lock);
                    total.merge(local);
                  });
  return total;
}

RotationSystem min_genus_rotation(const MultiGraph& g, const RunConfig& config) {
  require_connected(g);
  const RotationEnumerator en(g, config.enumeration_budget);
  const int planar_faces = static_cast<int>(g.edge_count()) - g.vertex_count() + 2;
  return en.at(extreme_faces(en, g.dart_count(), true, planar_faces, config.resolved_threads()).ordinal);
}

RotationSystem max_genus_rotation(const MultiGraph& g, const RunConfig& config) {
  require_connected(g);
  const RotationEnumerator en(g, config.enumeration_budget);
  const int fewest = 1 + betti(g) % 2;
  return en.at(extreme_faces(en, g.dart_count(), false, fewest, config.resolved_threads()).ordinal);
}

int min_genus_bruteforce(const MultiGraph& g, const RunConfig& config) {
  return genus_of(Embedding(g, min_genus_rotation(g, config)));
}

int max_genus_bruteforce(const MultiGraph& g, const RunConfig& config) {
  return genus_of(Embedding(g, max_genus_rotation(g, config)));
}

bool is_upper_embeddable(const MultiGraph& g, const RunConfig& config) {
  return max_genus_bruteforce(g, config) == betti(g) / 2;
}

int min_genus_of_components(const MultiGraph& g, const RunConfig& config) {
  int sum = 0;
  for (const auto& comp : components(g)) {
    std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    for (Vertex v : comp) keep[v] = true;
    std::vector<Vertex> drop;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (!keep[v]) drop.push_back(v);
    sum += min_genus_bruteforce(delete_vertices(g, drop).graph, config);
  }
  return sum;
}

Embedding planar_wheel_embedding(int n) {
  MultiGraph g = wheel(n);
  const Vertex center = n + 1;
  std::vector<std::vector<Dart>> cycles(static_cast<std::size_t>(n) + 1);
  for (Vertex i = 1; i <= n; ++i) {
    const std::size_t spoke = static_cast<std::size_t>(n + i - 1);
    const std::size_t next_rim = static_cast<std::size_t>(i - 1);         // (i, i+1)
    const std::size_t prev_rim = static_cast<std::size_t>((i + n - 2) % n);  // (i-1, i)
    cycles[i - 1] = {dart_of(spoke, 1), dart_of(prev_rim, 1), dart_of(next_rim, 0)};
    cycles[center - 1].push_back(dart_of(spoke, 0));
  }
  RotationSystem r(g, std::move(cycles));
  return Embedding(std::move(g), std::move(r));
}

}  // namespace genuslab
