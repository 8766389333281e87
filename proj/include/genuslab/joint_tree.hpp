#pragma once

// Joint trees: a spanning tree whose co-tree edges are cut into two lettered
// semi-edges. Walking around the resulting plane tree spells a single polygon
// word for the surface of the embedding.

#include <optional>
#include <string>
#include <vector>

#include "genuslab/embedding.hpp"
#include "genuslab/graph.hpp"
#include "genuslab/surface_word.hpp"

namespace genuslab {

struct JointTree {
  MultiGraph base;
  SpanningTree tree;
  RotationSystem rotation;
  /// letter_of[e] = k for the k-th co-tree edge (symbol "ak"), nullopt on tree edges.
  std::vector<std::optional<int>> letter_of;

  int betti() const { return static_cast<int>(tree.co_tree_edges.size()); }
  /// Vertices of the split tree: V plus one tip per semi-edge.
  int split_tree_vertex_count() const { return base.vertex_count() + 2 * betti(); }
  /// Semi-edge at the first endpoint of the edge record reads "ak", the other "ak-".
  Letter letter(Dart d) const;
};

JointTree build_joint_tree(const MultiGraph& g, const SpanningTree& t, const RotationSystem& r);

/// Boundary walk of the plane joint tree starting at the first dart of
/// vertex 1: tree darts are crossed (next = rotation successor of the twin),
/// semi-edges are read and turned around (next = rotation successor).
OrientedWordSystem associated_surface(const JointTree& jt);

}  // namespace genuslab
