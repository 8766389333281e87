#pragma once

// Near-wheels W_n + v: the wheel with a degree-3 apex attached at three
// antennal points, each a wheel vertex or a fresh subdivision vertex.

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "genuslab/config.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/surface_word.hpp"

namespace genuslab {

struct AttachPoint {
  enum class Kind { vertex, spoke, rim };
  Kind kind = Kind::vertex;
  /// Vertex label (centre is n+1) or 1-based spoke / rim-edge number.
  int target = 1;

  static AttachPoint vertex(Vertex v) { return {Kind::vertex, v}; }
  static AttachPoint spoke(int i) { return {Kind::spoke, i}; }
  static AttachPoint rim(int i) { return {Kind::rim, i}; }

  /// Edge index in wheel(n) for subdivision points.
  EdgeRef edge(int n) const;
  /// "V3", "C", "S2", "R5".
  std::string label(int n) const;

  friend auto operator<=>(const AttachPoint&, const AttachPoint&) = default;
};

/// Parses one token of the CLI form V<i> | C | S<i> | R<i>.
AttachPoint parse_attach_point(std::string_view token, int n);

struct NearWheel {
  int spokes = 0;
  MultiGraph graph{1, {}};
  Vertex apex = 0;
  std::array<AttachPoint, 3> antennae;
  std::array<Vertex, 3> antenna_vertices{};
};

/// Subdivisions first (in antenna order), then the apex n+2+k joined to the
/// three resulting vertices.
NearWheel build_near_wheel(int n, const std::array<AttachPoint, 3>& attach);

/// Indices into trace_faces(planar_wheel_embedding(n)) of the faces whose
/// boundary holds the point.
std::set<int> faces_containing(int n, const AttachPoint& p);

enum class NearWheelCase { common_face, two_faces, pairwise_separated };
std::string to_string(NearWheelCase c);

struct GenusPrediction {
  int genus = 0;
  NearWheelCase label = NearWheelCase::common_face;
};

/// 0 when one face of the planar wheel holds all three points, else 1;
/// labelled by whether some pair still shares a face.
GenusPrediction predict_genus(int n, const std::array<AttachPoint, 3>& attach);

/// All unordered triples of distinct points of W_n with at most one
/// subdivision per edge.
std::vector<std::array<AttachPoint, 3>> attach_configurations(int n);

struct SweepEntry {
  int n = 0;
  std::array<AttachPoint, 3> attach;
  GenusPrediction predicted;
  int bruteforce = 0;
};

struct SweepReport {
  std::vector<SweepEntry> checked;
  std::vector<SweepEntry> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Boundary word of a joint tree of W_n + v with antennae on spokes m and
/// m + p that share no face, co-tree letters a1..an, the apex edges y and x:
///   a1 y x x- a_m [a_k- a_k, k = m-1..2] a1- a_{m+p} [a_k- a_k, k = m+p-1..m+1]
///   a_m- y- a_{m+p}- [a_k- a_k, k = m+p+1..n]
/// Needs 2 <= m, p >= 2, m + p <= n.
OrientedWordSystem separated_spokes_word(int n, int m, int p);

/// Brute-force minimum genus against the prediction for n = n_min..n_max.
SweepReport verify_theorem_a(int n_min, int n_max, const RunConfig& config = {});

}  // namespace genuslab
