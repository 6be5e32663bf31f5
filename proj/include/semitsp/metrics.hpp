#pragma once

#include "semitsp/graph.hpp"

namespace semitsp {

// All-pairs shortest walks under d_G, with deterministic path reconstruction.
struct ShortestPathTable {
  int n = 0;
  std::vector<double> dist;       // row-major n*n
  std::vector<VertexId> next_hop; // first vertex after i on the chosen i->j path; i itself when i == j

  double distance(VertexId i, VertexId j) const { return dist[static_cast<size_t>(i) * n + j]; }

  // Full vertex sequence i, ..., j. Ties were broken toward the
  // lexicographically smallest intermediate sequence.
  Walk path(VertexId from, VertexId to) const;
};

ShortestPathTable floyd_warshall(const CompleteGraph& g);

// Smallest constant b >= 1 with d(x,z) <= b*(d(x,y) + d(y,z)) over all
// ordered triples of distinct vertices.
double compute_beta(const CompleteGraph& g);

// Smallest constant c >= 1 with d(x1,xn) <= c * sum d(xk,xk+1) over all
// finite chains. Positive weights let a shortest simple path attain the
// infimum, so this reduces to one all-pairs computation.
double compute_gamma(const CompleteGraph& g);
double compute_gamma(const CompleteGraph& g, const ShortestPathTable& sp);

struct MetricReport {
  double beta = 1.0;
  double gamma = 1.0;
  bool is_metric = true;
};

MetricReport classify(const CompleteGraph& g);

}  // namespace semitsp
