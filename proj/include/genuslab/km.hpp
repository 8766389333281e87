#pragma once

// Maximum-genus embeddings of complete graphs grown from the path
// v2 v3 ... vm v1 by inserting 2-paths (V-type edges) into face corners.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/config.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/numeric.hpp"

namespace genuslab {

/// The 2-path first - center - second.
struct VTypeEdge {
  Vertex center = 0;
  Vertex first = 0;
  Vertex second = 0;

  void validate(int n) const;
  std::string text() const;  // "V_1^{2,3}"
  friend bool operator==(const VTypeEdge&, const VTypeEdge&) = default;
};

struct InsertionStep {
  enum class Kind { vtype, single_edge };
  Kind kind = Kind::vtype;
  VTypeEdge vtype;          // for single_edge only center and first are used
  std::vector<int> multiplicities;

  static InsertionStep v(Vertex j, Vertex i, Vertex k, std::vector<int> mult = {});
  static InsertionStep e(Vertex j, Vertex k, std::vector<int> mult = {});
  std::string text() const;  // "V_1^{2,3} : 1 x 1 x 2" or "e^{5,7} : 6 x 6"
};

struct InsertionSchedule {
  int m = 0;
  std::vector<InsertionStep> steps;
};

struct FactoredCount {
  std::vector<std::vector<int>> step_factors;
  std::map<std::uint64_t, unsigned> prime_factorization;
  BigInt value;

  static FactoredCount of(std::vector<std::vector<int>> factors);
  std::string factorization_text() const;  // "2^26 * 3^11 * 5^5"
};

/// The unique plane embedding of the path v2 v3 ... vm v1; edge t joins
/// v_{t+2} to its successor on the path.
Embedding path_tree_embedding(int m);

/// Occurrences of v along the face boundaries (the corners at v); an isolated
/// vertex has one.
int corner_count(const Embedding& e, Vertex v);

/// Corner counts at (center, first, second). Requires a one-face embedding.
std::array<int, 3> count_vtype_ways(const Embedding& e, const VTypeEdge& vt);

/// Corner c at v is the gap right after rotation.at(v)[c].
struct CornerChoice {
  int center = 0;
  int first = 0;
  int second = 0;
};

/// Adds edges (center, first) and (center, second) with indices E and E+1,
/// both new darts at the center going into the same corner. Of the two
/// orders at the center the one leaving a single face is returned.
Embedding insert_vtype_one_face(const Embedding& e, const VTypeEdge& vt, const CornerChoice& choice = {});

/// Adds edge (j, k) with index E into a one-face embedding; the result has two faces.
Embedding insert_edge_two_face(const Embedding& e, Vertex j, Vertex k, std::array<int, 2> corners = {0, 0});

/// Any embedding: tries every corner triple and both orders and returns the
/// first insertion whose face count does not exceed the input's.
Embedding insert_vtype_nonincreasing(const Embedding& e, const VTypeEdge& vt);

/// Built-in schedules for m = 5..10 with their recorded tuples.
InsertionSchedule builtin_schedule(int m);

struct ReplayResult {
  Embedding embedding;
  FactoredCount count;
};

/// Replays with corner 0 everywhere; throws ScheduleMismatch when a recorded
/// tuple differs from the observed corner counts, invalid_argument when the
/// final graph is not K_m.
ReplayResult replay_schedule(const InsertionSchedule& s);

struct AlgorithmRun {
  int m = 0;
  bool succeeded = false;
  std::string failure;           // empty on success
  InsertionSchedule schedule;    // steps actually performed, with observed tuples
  Embedding embedding;           // final (or partial) embedding
  int faces = 0;
  int genus = 0;
};

/// Steps 1-14 for K_m with canonical corners. A revisited control state means
/// the steps cannot finish and is reported as failure, not thrown.
AlgorithmRun run_paper_algorithm(int m);

struct PlacementCensus {
  std::uint64_t replays = 0;
  std::size_t distinct_rotations = 0;
  std::map<int, std::uint64_t> genus_counts;  // over distinct rotation systems
};

/// Replays the schedule under every corner choice at every step.
PlacementCensus enumerate_placements(const InsertionSchedule& s, const RunConfig& config = {});

struct StahlBound {
  BigInt first;                        // [(m-6)!]^4 [(m-3)!]^(m-4)
  std::optional<BigRational> second;   // ((m-2)/(m-1))^2 [(m-3)!]^m when m = 0, 3 mod 4
};

StahlBound stahl_bound(int m);

}  // namespace genuslab
