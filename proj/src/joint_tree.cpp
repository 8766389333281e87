#include "genuslab/joint_tree.hpp"

#include <stdexcept>

#include "genuslab/errors.hpp"

namespace genuslab {

Letter JointTree::letter(Dart d) const {
  const auto& k = letter_of.at(edge_of(d));
  if (!k) throw std::invalid_argument("dart belongs to a tree edge");
  return Letter{"a" + std::to_string(*k), end_of(d) == 1};
}

JointTree build_joint_tree(const MultiGraph& g, const SpanningTree& t, const RotationSystem& r) {
  std::vector<EdgeRef> tree_edges = t.tree_edges;
  // Re-validate both pieces against g.
  SpanningTree checked = make_spanning_tree(g, std::move(tree_edges));
  if (checked.co_tree_edges.size() != t.co_tree_edges.size()) {
    throw std::invalid_argument("co-tree edges do not complement the tree");
  }
  JointTree jt{g, std::move(checked), RotationSystem(g, r.cycles()), {}};
  jt.letter_of.assign(g.edge_count(), std::nullopt);
  int k = 0;
  for (EdgeRef e : jt.tree.co_tree_edges) jt.letter_of[e.index] = ++k;
  return jt;
}

OrientedWordSystem associated_surface(const JointTree& jt) {
  Polygon word;
  if (jt.base.dart_count() == 0) return OrientedWordSystem({word});
  const auto succ = jt.rotation.successor_table();
  const Dart start = jt.rotation.at(1).front();
  Dart d = start;
  std::size_t steps = 0;
  do {
    if (jt.letter_of[edge_of(d)]) {
      word.push_back(jt.letter(d));
      d = succ[d];
    } else {
      d = succ[twin(d)];
    }
    ++steps;
  } while (d != start && steps <= jt.base.dart_count());
  if (steps != jt.base.dart_count()) {
    throw InternalError("joint-tree boundary walk did not visit every dart exactly once");
  }
  return OrientedWordSystem({std::move(word)});
}

}  // namespace genuslab
