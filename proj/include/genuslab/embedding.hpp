#pragma once

// Rotation systems on orientable surfaces.
//
// Face tracing convention: from dart d the walk continues with the rotation
// successor of twin(d). Every consistent convention yields the same genus.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "genuslab/config.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/numeric.hpp"

namespace genuslab {

class RotationSystem {
 public:
  RotationSystem() = default;
  /// cycles[v-1] is the cyclic order of the darts at v. Validated against g.
  RotationSystem(const MultiGraph& g, std::vector<std::vector<Dart>> cycles);

  /// Every vertex in increasing dart order.
  static RotationSystem identity(const MultiGraph& g);
  static RotationSystem random(const MultiGraph& g, std::mt19937_64& rng);

  const std::vector<Dart>& at(Vertex v) const { return cycles_.at(static_cast<std::size_t>(v) - 1); }
  const std::vector<std::vector<Dart>>& cycles() const noexcept { return cycles_; }
  int vertex_count() const noexcept { return static_cast<int>(cycles_.size()); }

  /// succ[d] = dart following d in the cyclic order at its owner.
  std::vector<Dart> successor_table() const;

  /// Each cycle rotated to start at its least dart; equal iff same rotation.
  RotationSystem canonical() const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
  friend auto operator<=>(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::vector<std::vector<Dart>> cycles_;
};

struct Embedding {
  MultiGraph graph;
  RotationSystem rotation;

  Embedding(MultiGraph g, RotationSystem r);
};

struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  std::size_t size() const noexcept { return faces.size(); }
};

FaceSet trace_faces(const Embedding& e);
/// (2 - V + E - F) / 2; throws InternalError if the parity fails.
int genus_of(const Embedding& e);

/// Genus from V, E, F for a connected graph.
int euler_genus(int vertices, std::size_t edges, std::size_t faces);

/// Counts orbits of d -> succ[twin(d)]. A dartless graph has one face.
/// `mark` is scratch space of size succ.size(); `stamp` must differ from every
/// value already in it and is advanced by the call.
int count_faces(std::span<const Dart> succ, std::vector<std::uint32_t>& mark, std::uint32_t& stamp);

/// Canonical rotation systems of g: at each vertex the least dart is pinned
/// first and the remaining darts range over all orders, giving
/// prod_v (d(v)-1)! systems in a fixed mixed-radix order.
class RotationEnumerator {
 public:
  /// Throws BudgetExceeded when the system count exceeds `budget`.
  RotationEnumerator(const MultiGraph& g, std::uint64_t budget);

  std::uint64_t count() const noexcept { return total_; }
  static BigInt count_for(const MultiGraph& g);

  /// Visits systems with ordinal in [begin, end). `visit` receives the
  /// successor table; returning false stops early.
  void for_range(std::uint64_t begin, std::uint64_t end,
                 const std::function<bool(std::span<const Dart>)>& visit) const;

  /// The rotation system with the given ordinal.
  RotationSystem at(std::uint64_t ordinal) const;

 private:
  MultiGraph graph_;
  std::vector<std::vector<std::vector<Dart>>> orders_;  // per vertex, all cyclic orders
  std::uint64_t total_ = 1;
};

/// Materializes every canonical rotation system (small graphs only).
std::vector<RotationSystem> enumerate_rotations(const MultiGraph& g, std::uint64_t budget);

struct GenusDistribution {
  std::map<int, BigInt> counts;

  BigInt total() const;
  int min_genus() const { return counts.begin()->first; }
  int max_genus() const { return counts.rbegin()->first; }
  /// Commutative, associative histogram merge.
  void merge(const GenusDistribution& other);
};

GenusDistribution genus_distribution(const MultiGraph& g, const RunConfig& config = {});
int min_genus_bruteforce(const MultiGraph& g, const RunConfig& config = {});
int max_genus_bruteforce(const MultiGraph& g, const RunConfig& config = {});
/// A rotation system realizing the minimum (maximum) genus.
RotationSystem min_genus_rotation(const MultiGraph& g, const RunConfig& config = {});
RotationSystem max_genus_rotation(const MultiGraph& g, const RunConfig& config = {});
bool is_upper_embeddable(const MultiGraph& g, const RunConfig& config = {});

/// Minimum genus of a possibly disconnected graph: the sum over components.
int min_genus_of_components(const MultiGraph& g, const RunConfig& config = {});

/// The planar embedding of wheel(n): centre spokes in rim order, every rim
/// vertex ordered (spoke, previous rim edge, next rim edge).
Embedding planar_wheel_embedding(int n);

}  // namespace genuslab
