#pragma once

#include <compare>
#include <span>
#include <vector>

#include "semitsp/error.hpp"

namespace semitsp {

using VertexId = int;

// Undirected edge; endpoints are kept sorted so {x,y} and {y,x} compare equal.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId x, VertexId y);

  auto operator<=>(const Edge&) const = default;
};

// Any vertex sequence whose consecutive entries differ. On a complete graph
// every such sequence is a walk.
using Walk = std::vector<VertexId>;

// Complete weighted graph on n >= 3 vertices. The weight matrix is symmetric,
// zero on the diagonal and strictly positive off it; together with the
// diagonal convention it is the graph's semimetric.
class CompleteGraph {
 public:
  static CompleteGraph from_weights(const std::vector<std::vector<double>>& weights);

  int size() const { return n_; }

  // d_G: 0 on the diagonal, the stored weight elsewhere. No bounds checks.
  double weight(VertexId x, VertexId y) const { return w_[static_cast<size_t>(x) * n_ + y]; }
  double weight(const Edge& e) const { return weight(e.a, e.b); }

  const std::vector<double>& raw() const { return w_; }

 private:
  int n_ = 0;
  std::vector<double> w_;  // row-major n*n
};

// Validating constructor, kept as a free function for symmetry with the rest
// of the graph operations.
CompleteGraph build_graph(const std::vector<std::vector<double>>& weights);

// Bounds-checked d_G lookup.
double edge_weight(const CompleteGraph& g, VertexId x, VertexId y);

bool is_permutation_of_all(std::span<const VertexId> order, int n);

// Total weight of the closed tour order[0] -> ... -> order[n-1] -> order[0].
double cycle_weight(const CompleteGraph& g, std::span<const VertexId> order);

// Canonical representative of the 2n equivalent tour encodings: rotate
// vertex 0 to the front, then fix the direction so order[1] < order[n-1].
std::vector<VertexId> canonicalize_cycle(std::span<const VertexId> order);

struct HamiltonianCycle {
  std::vector<VertexId> order;  // canonical form
  double weight = 0.0;
};

HamiltonianCycle make_cycle(const CompleteGraph& g, std::span<const VertexId> order);

struct Tree {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
};

bool is_valid_tree(const Tree& t);
bool is_spanning_tree(const Tree& t, const CompleteGraph& g);
double tree_weight(const CompleteGraph& g, const Tree& t);

// Neighbor lists indexed by vertex id (size n), each sorted ascending.
std::vector<std::vector<VertexId>> tree_adjacency(const Tree& t, int n);

// Multigraphs carry (tag, edge) pairs; parallel edges must differ in tag.
struct Multiedge {
  int tag = 0;
  Edge edge;

  auto operator<=>(const Multiedge&) const = default;
};

struct Multigraph {
  std::vector<VertexId> vertices;
  std::vector<Multiedge> edges;
};

}  // namespace semitsp
