#include "genuslab/near_wheel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "genuslab/embedding.hpp"

namespace genuslab {

namespace {

void check_point(int n, const AttachPoint& p) {
  const int hi = p.kind == AttachPoint::Kind::vertex ? n + 1 : n;
  if (p.target < 1 || p.target > hi) throw std::invalid_argument("attach point out of range for W_" + std::to_string(n));
}

}  // namespace

EdgeRef AttachPoint::edge(int n) const {
  switch (kind) {
    case Kind::rim:
      return EdgeRef{static_cast<std::size_t>(target - 1)};
    case Kind::spoke:
      return EdgeRef{static_cast<std::size_t>(n + target - 1)};
    case Kind::vertex:
      break;
  }
  throw std::invalid_argument("vertex attach point has no edge");
}

std::string AttachPoint::label(int n) const {
  switch (kind) {
    case Kind::vertex:
      return target == n + 1 ? "C" : "V" + std::to_string(target);
    case Kind::spoke:
      return "S" + std::to_string(target);
    case Kind::rim:
      return "R" + std::to_string(target);
  }
  return {};
}

AttachPoint parse_attach_point(std::string_view token, int n) {
  if (token == "C") return AttachPoint::vertex(n + 1);
  if (token.size() < 2) throw std::invalid_argument("bad attach point '" + std::string(token) + "'");
  int value = 0;
  const auto digits = token.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad attach point '" + std::string(token) + "'");
  }
  AttachPoint p;
  switch (token.front()) {
    case 'V': p = AttachPoint::vertex(value); break;
    case 'S': p = AttachPoint::spoke(value); break;
    case 'R': p = AttachPoint::rim(value); break;
    default: throw std::invalid_argument("bad attach point '" + std::string(token) + "'");
  }
  check_point(n, p);
  return p;
}

NearWheel build_near_wheel(int n, const std::array<AttachPoint, 3>& attach) {
  MultiGraph g = wheel(n);
  for (const auto& p : attach) check_point(n, p);
  if (attach[0] == attach[1] || attach[0] == attach[2] || attach[1] == attach[2]) {
    throw std::invalid_argument("antennal points must be distinct");
  }
  NearWheel out;
  out.spokes = n;
  out.antennae = attach;
  // Subdividing keeps the original edge index on the first half, so later
  // subdivisions of other wheel edges still find their edge.
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& p = attach[k];
    if (p.kind == AttachPoint::Kind::vertex) {
      out.antenna_vertices[k] = p.target;
      continue;
    }
    auto [h, w] = subdivide_edge(g, p.edge(n));
    g = std::move(h);
    out.antenna_vertices[k] = w;
  }
  out.apex = g.vertex_count() + 1;
  auto edges = g.edges();
  for (Vertex a : out.antenna_vertices) edges.emplace_back(out.apex, a);
  out.graph = MultiGraph(out.apex, std::move(edges));
  return out;
}

std::set<int> faces_containing(int n, const AttachPoint& p) {
  check_point(n, p);
  const Embedding planar = planar_wheel_embedding(n);
  const FaceSet fs = trace_faces(planar);
  std::set<int> out;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (Dart d : fs.faces[f]) {
      const bool hit = p.kind == AttachPoint::Kind::vertex ? planar.graph.owner(d) == p.target
                                                          : edge_of(d) == p.edge(n).index;
      if (hit) out.insert(static_cast<int>(f));
    }
  }
  return out;
}

std::string to_string(NearWheelCase c) {
  switch (c) {
    case NearWheelCase::common_face: return "common-face";
    case NearWheelCase::two_faces: return "two-faces";
    case NearWheelCase::pairwise_separated: return "pairwise-separated";
  }
  return {};
}

GenusPrediction predict_genus(int n, const std::array<AttachPoint, 3>& attach) {
  std::array<std::set<int>, 3> faces;
  for (std::size_t k = 0; k < 3; ++k) faces[k] = faces_containing(n, attach[k]);
  auto meets = [](const std::set<int>& a, const std::set<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int f) { return b.count(f) != 0; });
  };
  std::set<int> all;
  std::set_intersection(faces[0].begin(), faces[0].end(), faces[1].begin(), faces[1].end(),
                        std::inserter(all, all.begin()));
  if (meets(all, faces[2])) return {0, NearWheelCase::common_face};
  const bool some_pair = meets(faces[0], faces[1]) || meets(faces[0], faces[2]) || meets(faces[1], faces[2]);
  return {1, some_pair ? NearWheelCase::two_faces : NearWheelCase::pairwise_separated};
}

std::vector<std::array<AttachPoint, 3>> attach_configurations(int n) {
  std::vector<AttachPoint> points;
  for (Vertex v = 1; v <= n + 1; ++v) points.push_back(AttachPoint::vertex(v));
  for (int i = 1; i <= n; ++i) points.push_back(AttachPoint::spoke(i));
  for (int i = 1; i <= n; ++i) points.push_back(AttachPoint::rim(i));
  std::vector<std::array<AttachPoint, 3>> out;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      for (std::size_t c = b + 1; c < points.size(); ++c) out.push_back({points[a], points[b], points[c]});
  return out;
}

SweepReport verify_theorem_a(int n_min, int n_max, const RunConfig& config) {
  std::vector<SweepEntry> work;
  for (int n = std::max(3, n_min); n <= n_max; ++n)
    for (const auto& attach : attach_configurations(n)) work.push_back({n, attach, predict_genus(n, attach), -1});

  // One configuration per task; each brute-force search runs single-threaded.
  RunConfig inner = config;
  inner.thread_count = 1;
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < work.size(); i = next++) {
        const NearWheel nw = build_near_wheel(work[i].n, work[i].attach);
        work[i].bruteforce = min_genus_bruteforce(nw.graph, inner);
      }
    } catch (...) {
      std::lock_guard guard(lock);
      if (!failure) failure = std::current_exception();
      next = work.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned threads = config.resolved_threads();
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  SweepReport report;
  for (auto& entry : work) {
    if (entry.bruteforce != entry.predicted.genus) report.mismatches.push_back(entry);
  }
  report.checked = std::move(work);
  return report;
}

OrientedWordSystem separated_spokes_word(int n, int m, int p) {
  if (m < 2 || p < 2 || m + p > n) {
    throw std::invalid_argument("separated_spokes_word needs 2 <= m, p >= 2 and m + p <= n");
  }
  const auto a = [](int k) { return "a" + std::to_string(k); };
  std::string w = "a1 y x x- " + a(m);
  for (int k = m - 1; k >= 2; --k) w += " " + a(k) + "- " + a(k);
  w += " a1- " + a(m + p);
  for (int k = m + p - 1; k >= m + 1; --k) w += " " + a(k) + "- " + a(k);
  w += " " + a(m) + "- y- " + a(m + p) + "-";
  for (int k = m + p + 1; k <= n; ++k) w += " " + a(k) + "- " + a(k);
  return parse_word(w);
}

}  // namespace genuslab
