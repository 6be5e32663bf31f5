#pragma once

#include "semitsp/graph.hpp"
#include "semitsp/metrics.hpp"

namespace semitsp {

struct Matching {
  std::vector<Edge> edges;  // vertex-disjoint, sorted
  double weight = 0.0;
};

inline constexpr int kBruteMatchingCap = 12;

// Minimum-weight perfect matching via the O(n^3) blossom algorithm. The
// table form matches on an explicit symmetric weight table whose rows
// correspond to ids[0..k); results are reported in the caller's ids.
// Weights are snapped to a 2^-40 relative grid so the dual arithmetic is
// exact; the induced error is orders of magnitude below 1e-9.
Matching min_weight_perfect_matching(const std::vector<std::vector<double>>& table,
                                     std::span<const VertexId> ids);
Matching min_weight_perfect_matching(const CompleteGraph& g, std::span<const VertexId> subset);

// Exhaustive minimum over all (k-1)!! perfect matchings; the independent
// oracle for the blossom route.
Matching brute_force_matching(const std::vector<std::vector<double>>& table,
                              std::span<const VertexId> ids, int cap = kBruteMatchingCap);
Matching brute_force_matching(const CompleteGraph& g, std::span<const VertexId> subset,
                              int cap = kBruteMatchingCap);

// Family of walks pairing up a vertex set through their endpoints.
struct PathMatching {
  std::vector<Walk> paths;
};

double path_matching_weight(const CompleteGraph& g, const PathMatching& pm);

// Minimum-weight perfect path matching: matches the odd set on an auxiliary
// complete graph weighted by shortest-path distances, then expands every
// matched pair into its reconstructed shortest path.
PathMatching build_path_matching(const CompleteGraph& g, std::span<const VertexId> odd,
                                 const ShortestPathTable& sp);

// Makes the paths pairwise vertex-disjoint without touching any endpoint:
// repeatedly pick a path with exactly one conflict and bypass the conflicting
// vertex inside whichever path holds it internally.
PathMatching resolve_conflicts(PathMatching pm);

}  // namespace semitsp
