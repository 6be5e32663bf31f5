#include "semitsp/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace semitsp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::AsymmetricWeights: return "AsymmetricWeights";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::NonpositiveWeight: return "NonpositiveWeight";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotSpanning: return "NotSpanning";
    case Errc::RootNotInTree: return "RootNotInTree";
    case Errc::MalformedTraversal: return "MalformedTraversal";
    case Errc::OddVertexCount: return "OddVertexCount";
    case Errc::SubsetTooLarge: return "SubsetTooLarge";
    case Errc::OddCardinality: return "OddCardinality";
    case Errc::NotCycleFree: return "NotCycleFree";
    case Errc::OddDegreeVertex: return "OddDegreeVertex";
    case Errc::DisconnectedMultigraph: return "DisconnectedMultigraph";
    case Errc::BadStartVertex: return "BadStartVertex";
    case Errc::EdgeNotInTree: return "EdgeNotInTree";
    case Errc::TreeTooSmall: return "TreeTooSmall";
    case Errc::BadConfig: return "BadConfig";
    case Errc::EmptyRecords: return "EmptyRecords";
    case Errc::IoFailure: return "IoFailure";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

Edge::Edge(VertexId x, VertexId y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) raise(Errc::MalformedInput, "edge endpoints must differ, got " + std::to_string(x));
}

CompleteGraph CompleteGraph::from_weights(const std::vector<std::vector<double>>& weights) {
  const size_t n = weights.size();
  if (n < 3) raise(Errc::TooFewVertices, "need n >= 3, got n = " + std::to_string(n));
  for (size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n)
      raise(Errc::MalformedInput, "row " + std::to_string(i) + " has " +
                                      std::to_string(weights[i].size()) + " entries, expected " +
                                      std::to_string(n));
  }
  for (size_t i = 0; i < n; ++i) {
    if (weights[i][i] != 0.0)
      raise(Errc::NonzeroDiagonal, "weights[" + std::to_string(i) + "][" + std::to_string(i) +
                                       "] = " + std::to_string(weights[i][i]));
    for (size_t j = i + 1; j < n; ++j) {
      if (weights[i][j] != weights[j][i])
        raise(Errc::AsymmetricWeights,
              "weights differ at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(weights[i][j] > 0.0))
        raise(Errc::NonpositiveWeight,
              "weights[" + std::to_string(i) + "][" + std::to_string(j) +
                  "] = " + std::to_string(weights[i][j]));
    }
  }
  CompleteGraph g;
  g.n_ = static_cast<int>(n);
  g.w_.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.w_[i * n + j] = weights[i][j];
  return g;
}

CompleteGraph build_graph(const std::vector<std::vector<double>>& weights) {
  return CompleteGraph::from_weights(weights);
}

double edge_weight(const CompleteGraph& g, VertexId x, VertexId y) {
  if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
    raise(Errc::IndexOutOfRange, "vertex pair (" + std::to_string(x) + "," + std::to_string(y) +
                                     ") on a graph with n = " + std::to_string(g.size()));
  return g.weight(x, y);
}

bool is_permutation_of_all(std::span<const VertexId> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (VertexId v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

static void require_permutation(std::span<const VertexId> order, int n) {
  if (!is_permutation_of_all(order, n))
    raise(Errc::NotAPermutation,
          "sequence of length " + std::to_string(order.size()) +
              " is not a permutation of 0.." + std::to_string(n - 1));
}

double cycle_weight(const CompleteGraph& g, std::span<const VertexId> order) {
  require_permutation(order, g.size());
  double total = 0.0;
  for (size_t i = 0; i + 1 < order.size(); ++i) total += g.weight(order[i], order[i + 1]);
  total += g.weight(order.back(), order.front());
  return total;
}

std::vector<VertexId> canonicalize_cycle(std::span<const VertexId> order) {
  const size_t n = order.size();
  if (n < 3) raise(Errc::NotAPermutation, "a Hamiltonian cycle needs at least 3 vertices");
  {
    std::vector<char> seen(n, 0);
    for (VertexId v : order) {
      if (v < 0 || static_cast<size_t>(v) >= n || seen[v])
        raise(Errc::NotAPermutation, "sequence is not a permutation");
      seen[v] = 1;
    }
  }
  size_t zero_pos = 0;
  while (order[zero_pos] != 0) ++zero_pos;
  std::vector<VertexId> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = order[(zero_pos + i) % n];
  if (out[1] > out[n - 1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

HamiltonianCycle make_cycle(const CompleteGraph& g, std::span<const VertexId> order) {
  require_permutation(order, g.size());
  HamiltonianCycle c;
  c.order = canonicalize_cycle(order);
  c.weight = cycle_weight(g, c.order);
  return c;
}

std::vector<std::vector<VertexId>> tree_adjacency(const Tree& t, int n) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : t.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

bool is_valid_tree(const Tree& t) {
  if (t.vertices.empty()) return false;
  if (t.edges.size() + 1 != t.vertices.size()) return false;
  std::vector<VertexId> verts = t.vertices;
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
  for (const Edge& e : t.edges) {
    if (!std::binary_search(verts.begin(), verts.end(), e.a) ||
        !std::binary_search(verts.begin(), verts.end(), e.b))
      return false;
  }
  // |E| = |V| - 1 plus connectivity implies acyclic.
  const VertexId max_id = verts.back();
  std::vector<std::vector<VertexId>> adj(max_id + 1);
  for (const Edge& e : t.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> seen(max_id + 1, 0);
  std::vector<VertexId> stack{verts[0]};
  seen[verts[0]] = 1;
  size_t reached = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return reached == verts.size();
}

bool is_spanning_tree(const Tree& t, const CompleteGraph& g) {
  if (static_cast<int>(t.vertices.size()) != g.size()) return false;
  for (VertexId v : t.vertices)
    if (v < 0 || v >= g.size()) return false;
  return is_valid_tree(t);
}

double tree_weight(const CompleteGraph& g, const Tree& t) {
  double total = 0.0;
  for (const Edge& e : t.edges) total += g.weight(e);
  return total;
}

}  // namespace semitsp
