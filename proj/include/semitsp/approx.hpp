#pragma once

#include "semitsp/graph.hpp"
#include "semitsp/metrics.hpp"

namespace semitsp {

enum class Algorithm { Dmst, Ab, Rab, Pmch, Pch };

const char* algorithm_name(Algorithm a);  // "dmst", "ab", "rab", "pmch", "pch"

struct ApproxSolution {
  HamiltonianCycle cycle;
  double weight = 0.0;
  Algorithm algorithm = Algorithm::Dmst;
  double bound_factor = 0.0;  // guarantee evaluated at this graph's beta/gamma
  double time_ms = 0.0;       // construction only; the metric report is not timed
};

// Guarantee per algorithm: 2*gamma, (3b^2+b)/2, (b^2+b)/2, 3b^2/2, 3*gamma/2.
double bound_factor_for(Algorithm a, const MetricReport& report);

// Double minimal spanning tree: MST, depth-first traversal, shortcutting.
ApproxSolution solve_dmst(const CompleteGraph& g, VertexId root = 0,
                          const MetricReport* report = nullptr);

// The T^3 construction: split the tree at an edge, recurse on both sides,
// rejoin the two Hamiltonian paths. The returned order keeps {e.a, e.b} as
// its wrap-around pair, and every cycle edge joins vertices at tree distance
// at most 3.
std::vector<VertexId> tree_cube_cycle(const Tree& t, const Edge& e, const CompleteGraph& g,
                                      bool refined);

ApproxSolution solve_ab(const CompleteGraph& g, const MetricReport* report = nullptr);
ApproxSolution solve_rab(const CompleteGraph& g, const MetricReport* report = nullptr);

// Path matching Christofides: shortest-path matching on the MST's odd
// vertices, conflict resolution, an alternating Eulerian walk on the
// path-contracted multigraph, the degree-3 forest transform and duplicate
// removal.
ApproxSolution solve_pmch(const CompleteGraph& g, const MetricReport* report = nullptr);

// Polygonal Christofides: blossom matching on the odd vertices, Eulerian
// walk preferring matching edges, enhanced shortcutting.
ApproxSolution solve_pch(const CompleteGraph& g, const MetricReport* report = nullptr);

// All five with one shared metric report; per-algorithm wall times recorded.
std::vector<ApproxSolution> solve_all(const CompleteGraph& g, VertexId root = 0);

}  // namespace semitsp
