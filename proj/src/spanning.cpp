#include "semitsp/spanning.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace semitsp {

namespace {

struct Candidate {
  double w = std::numeric_limits<double>::infinity();
  VertexId from = -1;  // tree endpoint

  bool better_than(const Candidate& o, VertexId to) const {
    if (w != o.w) return w < o.w;
    Edge mine(from, to), theirs(o.from, to);
    return mine < theirs;
  }
};

}  // namespace

Tree minimum_spanning_tree(const CompleteGraph& g) {
  const int n = g.size();
  std::vector<char> in_tree(n, 0);
  std::vector<Candidate> best(n);
  in_tree[0] = 1;
  for (int v = 1; v < n; ++v) best[v] = {g.weight(0, v), 0};

  Tree t;
  t.vertices.resize(n);
  std::iota(t.vertices.begin(), t.vertices.end(), 0);
  t.edges.reserve(n - 1);

  for (int step = 1; step < n; ++step) {
    int pick = -1;
    for (int v = 1; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick == -1) {
        pick = v;
        continue;
      }
      // Compare the frontier edges (weight, then endpoints) rather than the
      // vertices, so the choice matches a lexicographic edge scan.
      const Candidate& a = best[v];
      const Candidate& b = best[pick];
      if (a.w != b.w ? a.w < b.w : Edge(a.from, v) < Edge(b.from, pick)) pick = v;
    }
    in_tree[pick] = 1;
    t.edges.emplace_back(best[pick].from, pick);
    for (int v = 1; v < n; ++v) {
      if (in_tree[v]) continue;
      Candidate cand{g.weight(pick, v), pick};
      if (cand.better_than(best[v], v)) best[v] = cand;
    }
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

bool tree_weight_lower_bound_check(const CompleteGraph& g, const Tree& t, double exact_weight) {
  if (!is_spanning_tree(t, g))
    raise(Errc::NotSpanning, "tree does not span the graph's " + std::to_string(g.size()) + " vertices");
  return tree_weight(g, t) <= exact_weight;
}

TreeTraversal dfs_traversal(const Tree& t, VertexId root) {
  if (std::find(t.vertices.begin(), t.vertices.end(), root) == t.vertices.end())
    raise(Errc::RootNotInTree, "root " + std::to_string(root) + " is not a tree vertex");

  const VertexId max_id = *std::max_element(t.vertices.begin(), t.vertices.end());
  auto adj = tree_adjacency(t, max_id + 1);

  TreeTraversal out;
  out.vertices.reserve(2 * t.vertices.size() - 1);
  auto walk = [&](auto&& self, VertexId u, VertexId parent) -> void {
    out.vertices.push_back(u);
    for (VertexId v : adj[u]) {
      if (v == parent) continue;
      self(self, v, u);
      out.vertices.push_back(u);
    }
  };
  walk(walk, root, -1);
  return out;
}

std::vector<VertexId> shortcut(const TreeTraversal& traversal) {
  const auto& xs = traversal.vertices;
  if (xs.empty() || xs.size() % 2 == 0 || xs.front() != xs.back())
    raise(Errc::MalformedTraversal, "expected an odd-length closed walk");
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i] == xs[i + 1]) raise(Errc::MalformedTraversal, "consecutive vertices repeat");
  if (xs.size() == 1 && xs.front() != xs.back())
    raise(Errc::MalformedTraversal, "walk must be closed");

  const size_t n = (xs.size() + 1) / 2;
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<char> seen;
  const VertexId max_id = *std::max_element(xs.begin(), xs.end());
  seen.assign(max_id + 1, 0);
  for (VertexId v : xs) {
    if (v < 0) raise(Errc::MalformedTraversal, "negative vertex id");
    if (!seen[v]) {
      seen[v] = 1;
      order.push_back(v);
    }
  }
  if (order.size() != n)
    raise(Errc::MalformedTraversal, "walk of length " + std::to_string(xs.size()) +
                                        " visits " + std::to_string(order.size()) +
                                        " distinct vertices, expected " + std::to_string(n));
  return order;
}

}  // namespace semitsp
