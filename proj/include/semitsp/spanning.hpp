#pragma once

#include "semitsp/graph.hpp"

namespace semitsp {

// Prim from vertex 0 on the dense matrix, O(n^2). Weight ties resolve to the
// lexicographically smaller edge, so the tree is deterministic.
Tree minimum_spanning_tree(const CompleteGraph& g);

// Certifies the spanning-tree lower bound w(T) <= w(H_ideal).
bool tree_weight_lower_bound_check(const CompleteGraph& g, const Tree& t, double exact_weight);

// Closed depth-first walk visiting every tree edge exactly twice.
struct TreeTraversal {
  std::vector<VertexId> vertices;  // length 2n-1, starts and ends at the root
};

// Children are visited in ascending index order; a vertex is recorded on
// descent and again after each child returns.
TreeTraversal dfs_traversal(const Tree& t, VertexId root);

// Keeps each vertex's first appearance, dropping later repetitions. The
// result is a tour order beginning at the traversal's root.
std::vector<VertexId> shortcut(const TreeTraversal& traversal);

}  // namespace semitsp
